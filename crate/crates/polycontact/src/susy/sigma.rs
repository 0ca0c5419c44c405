//! The sigma-matrix table: identity plus the three Pauli matrices, with
//! exact Gaussian-rational entries, indexed (sigma^mu)_a^{b-dot}.

use crate::rational::GaussianRational;

/// Four 2x2 matrices sigma^mu = (1, sigma^i). Rows carry the undotted
/// spinor index a, columns the dotted index b-dot.
#[derive(Clone)]
pub struct SigmaTable {
    matrices: [[[GaussianRational; 2]; 2]; 4],
}

impl Default for SigmaTable {
    fn default() -> Self {
        Self::new()
    }
}

impl SigmaTable {
    pub fn new() -> Self {
        let o = GaussianRational::zero;
        let l = GaussianRational::one;
        let i = GaussianRational::i;
        let m = || GaussianRational::from_int(-1);
        let mi = || GaussianRational::imag_int(-1);
        SigmaTable {
            matrices: [
                [[l(), o()], [o(), l()]],
                [[o(), l()], [l(), o()]],
                [[o(), mi()], [i(), o()]],
                [[l(), o()], [o(), m()]],
            ],
        }
    }

    /// (sigma^mu)_a^{b-dot}; all indices zero-based.
    pub fn entry(&self, mu: usize, a: usize, b: usize) -> &GaussianRational {
        &self.matrices[mu][a][b]
    }

    pub fn matrix(&self, mu: usize) -> &[[GaussianRational; 2]; 2] {
        &self.matrices[mu]
    }

    /// Pauli anticommutator check: sigma^i sigma^j + sigma^j sigma^i
    /// = 2 delta^{ij} 1 for i, j in {1,2,3}.
    pub fn satisfies_clifford_relations(&self) -> bool {
        for i in 1..4 {
            for j in 1..4 {
                let a = mat_mul(self.matrix(i), self.matrix(j));
                let b = mat_mul(self.matrix(j), self.matrix(i));
                for r in 0..2 {
                    for c in 0..2 {
                        let sum = &a[r][c] + &b[r][c];
                        let expect = if i == j && r == c {
                            GaussianRational::from_int(2)
                        } else {
                            GaussianRational::zero()
                        };
                        if sum != expect {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

pub fn mat_mul(
    a: &[[GaussianRational; 2]; 2],
    b: &[[GaussianRational; 2]; 2],
) -> [[GaussianRational; 2]; 2] {
    let mut out = [
        [GaussianRational::zero(), GaussianRational::zero()],
        [GaussianRational::zero(), GaussianRational::zero()],
    ];
    for r in 0..2 {
        for c in 0..2 {
            for (k, bk) in b.iter().enumerate() {
                out[r][c] += &(&a[r][k] * &bk[c]);
            }
        }
    }
    out
}

/// Entrywise conjugate transpose (the dagger with i -> -i on entries).
pub fn mat_dagger(a: &[[GaussianRational; 2]; 2]) -> [[GaussianRational; 2]; 2] {
    let conj = |z: &GaussianRational| GaussianRational::new(z.re.clone(), -&z.im);
    [
        [conj(&a[0][0]), conj(&a[1][0])],
        [conj(&a[0][1]), conj(&a[1][1])],
    ]
}
