//! Generator declarations and contexts.
//!
//! A `GeneratorContext` is the fixed, ordered alphabet of symbols a
//! computation runs over: even and odd coordinates, their fiber partners,
//! and formal parameters. Declaration order is the canonical order used to
//! sort odd factors; all exported identities are independent of it.

use crate::error::AlgebraError;
use std::collections::HashMap;
use std::ops::Add;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

/// Z_2 grading label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// The Koszul sign (-1)^{a*b} of commuting two homogeneous factors.
    pub fn koszul_sign(self, other: Parity) -> i32 {
        if self.is_odd() && other.is_odd() {
            -1
        } else {
            1
        }
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// What role a generator plays in a chart.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorKind {
    /// A coordinate of the underlying space.
    Base,
    /// The differential paired with a base coordinate (parity flipped).
    Fiber,
    /// A formal constant: odd transformation parameters, shift vectors,
    /// formal units like the phase u or the dilation scale t.
    Parameter,
}

/// One declared symbol.
#[derive(Debug, Clone)]
pub struct Generator {
    pub name: String,
    pub parity: Parity,
    pub kind: GeneratorKind,
    /// Invertible generators admit negative integer exponents (Laurent).
    pub invertible: bool,
}

/// Index of a generator within its context.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenId(pub u32);

impl GenId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

static NEXT_CONTEXT_ID: AtomicU64 = AtomicU64::new(0);

/// An immutable, ordered set of generators. Values (`SuperPoly`) carry an
/// `Arc` to their context; mixing values from different contexts is an error.
#[derive(Debug)]
pub struct GeneratorContext {
    uid: u64,
    generators: Vec<Generator>,
    by_name: HashMap<String, GenId>,
}

impl GeneratorContext {
    pub fn new(generators: Vec<Generator>) -> Result<Arc<Self>, AlgebraError> {
        let mut by_name = HashMap::new();
        for (idx, g) in generators.iter().enumerate() {
            if by_name.insert(g.name.clone(), GenId(idx as u32)).is_some() {
                return Err(AlgebraError::DuplicateGenerator(g.name.clone()));
            }
        }
        Ok(Arc::new(GeneratorContext {
            uid: NEXT_CONTEXT_ID.fetch_add(1, Ordering::Relaxed),
            generators,
            by_name,
        }))
    }

    pub fn uid(&self) -> u64 {
        self.uid
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generator(&self, id: GenId) -> &Generator {
        &self.generators[id.index()]
    }

    pub fn parity(&self, id: GenId) -> Parity {
        self.generators[id.index()].parity
    }

    pub fn name(&self, id: GenId) -> &str {
        &self.generators[id.index()].name
    }

    pub fn is_invertible(&self, id: GenId) -> bool {
        self.generators[id.index()].invertible
    }

    pub fn lookup(&self, name: &str) -> Option<GenId> {
        self.by_name.get(name).copied()
    }

    pub fn ids(&self) -> impl Iterator<Item = GenId> + '_ {
        (0..self.generators.len() as u32).map(GenId)
    }

    pub fn same_context(&self, other: &GeneratorContext) -> bool {
        self.uid == other.uid
    }
}
