//! Extending the superspace by one even direction turns the polycontact
//! form into a closed non-degenerate vector-valued two-form: omega =
//! d(e^l pullback(alpha)) on the cylinder, and varpi = d(r^2 alpha) on the
//! cone, where the multiplicative group acts by dilation.

use crate::algebra::{GenId, Parity, SuperPoly};
use crate::calculus::{
    exterior_derivative, interior_product, interior_scalar, nondegeneracy_check, Chart, SuperMap,
    VectorField, VectorValuedForm,
};
use crate::rational::GaussianRational;
use crate::report::{CheckReport, ClaimSet};
use crate::susy::model::SusyFrame;
use crate::susy::verify::d_alpha_display;
use std::collections::BTreeMap;

/// The cylinder: superspace coordinates plus the even coordinate l with
/// formal exponentials e^{k l}.
pub struct Symplectization {
    frame: SusyFrame,
    lambda: GenId,
    omega: VectorValuedForm,
}

impl Default for Symplectization {
    fn default() -> Self {
        Self::new()
    }
}

impl Symplectization {
    pub fn new() -> Self {
        let chart = Chart::builder()
            .base("x0", Parity::Even)
            .base("x1", Parity::Even)
            .base("x2", Parity::Even)
            .base("x3", Parity::Even)
            .base("th1", Parity::Odd)
            .base("th2", Parity::Odd)
            .base("thb1", Parity::Odd)
            .base("thb2", Parity::Odd)
            .base("l", Parity::Even)
            .build()
            .expect("cylinder chart is well formed");
        let frame = SusyFrame::on_chart(&chart);
        let lambda = chart.lookup("l").unwrap();
        let e_l = SuperPoly::exp(chart.context(), lambda, GaussianRational::one())
            .expect("l is even");
        let omega = exterior_derivative(&frame.alpha().scale_form(&e_l));
        Symplectization {
            frame,
            lambda,
            omega,
        }
    }

    pub fn chart(&self) -> &Chart {
        self.frame.chart()
    }

    pub fn frame(&self) -> &SusyFrame {
        &self.frame
    }

    pub fn lambda(&self) -> GenId {
        self.lambda
    }

    pub fn omega(&self) -> &VectorValuedForm {
        &self.omega
    }

    pub fn exp_lambda(&self) -> SuperPoly {
        SuperPoly::exp(self.chart().context(), self.lambda, GaussianRational::one()).unwrap()
    }

    /// Pull a scalar on the plain superspace chart up along the projection
    /// that drops l: an injection of values, matching generators by name.
    pub fn lift_scalar(&self, f: &SuperPoly) -> SuperPoly {
        self.chart()
            .lift_from(f)
            .expect("superspace generators exist on the cylinder")
    }

    /// The full coordinate frame {d/dx^mu, d/dth^a, d/dthb_a, d/dl}.
    pub fn coordinate_frame(&self) -> Vec<VectorField> {
        let mut fields = Vec::new();
        for id in self
            .frame
            .susy_base_ids()
            .into_iter()
            .chain(std::iter::once(self.lambda))
        {
            fields.push(VectorField::frame(self.chart(), id).expect("base coordinate"));
        }
        fields
    }

    /// The expected coordinate expression
    /// omega = e^l (dl dx^mu + i dl(th sigma^mu dthb + dth sigma^mu thb)
    ///              + 2i dth sigma^mu dthb) d/dx^mu.
    pub fn omega_display(&self) -> VectorValuedForm {
        let ch = self.chart();
        let e_l = self.exp_lambda();
        let dl = ch.gen(ch.fiber_of(self.lambda).unwrap());
        let d_alpha = d_alpha_display(&self.frame);
        let mut comps = BTreeMap::new();
        for xid in self.frame.x_ids() {
            let comp = &(&dl * &self.frame.alpha().component(*xid))
                + &d_alpha.component(*xid);
            comps.insert(*xid, &e_l * &comp);
        }
        VectorValuedForm::from_components(ch, comps).expect("x legs only")
    }
}

/// omega is even, closed, equals its displayed coordinate form, and is
/// non-degenerate on the full coordinate frame of the cylinder.
pub fn verify_symplectize(s: &Symplectization) -> CheckReport {
    let mut claims = ClaimSet::new(
        "symplectize",
        "omega = d(e^l alpha) is an even, closed, non-degenerate vector-valued two-form",
    );
    let omega = s.omega();
    claims.claim_eq("omega has even parity", &format!("{:?}", omega.parity()), &format!("{:?}", Some(Parity::Even)));
    let d_omega = exterior_derivative(omega);
    claims.claim_zero("d(omega) = 0", &d_omega, d_omega.is_zero());
    claims.claim_eq("omega matches its coordinate display", omega, &s.omega_display());

    // Leibniz intermediate: omega = e^l (dl alpha + d alpha).
    let ch = s.chart();
    let dl = ch.gen(ch.fiber_of(s.lambda()).unwrap());
    let intermediate = s
        .frame()
        .alpha()
        .scale_form(&dl)
        .add(&exterior_derivative(s.frame().alpha()))
        .unwrap()
        .scale_form(&s.exp_lambda());
    claims.claim_eq("omega = e^l (dl alpha + d alpha)", omega, &intermediate);

    // Setting l = 0 and discarding dl terms recovers d(alpha).
    let mut assign = BTreeMap::new();
    assign.insert(s.lambda(), ch.zero());
    assign.insert(ch.fiber_of(s.lambda()).unwrap(), ch.zero());
    let mut reduced_comps = BTreeMap::new();
    for (slot, comp) in omega.components() {
        let r = comp.substitute(&assign).expect("l = 0 is a supported restriction");
        if !r.is_zero() {
            reduced_comps.insert(*slot, r);
        }
    }
    let reduced = VectorValuedForm::from_components(ch, reduced_comps).unwrap();
    claims.claim_eq(
        "omega at l = 0 without dl terms is d(alpha)",
        &reduced,
        &exterior_derivative(s.frame().alpha()),
    );

    let (full, witness) = nondegeneracy_check(omega, &s.coordinate_frame()).expect("one chart");
    claims.claim_with_witness("body rank full on the coordinate frame", full, || {
        witness
            .map(|w| w.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "))
            .unwrap_or_default()
    });
    claims.into_report()
}

/// The three-block decomposition behind the non-degeneracy proof:
/// alpha vanishes on span{D, Db} and pairs fully with the translations;
/// d(alpha) does the opposite; dl pairs with the new direction.
pub fn verify_block_decomposition(s: &Symplectization) -> CheckReport {
    let mut claims = ClaimSet::new(
        "block-decomposition",
        "alpha and d(alpha) vanish and pair non-degenerately on complementary blocks; dl covers the extension",
    );
    let frame = s.frame();
    let alpha = frame.alpha();
    let d_alpha = exterior_derivative(alpha);

    for a in 0..2 {
        let c = interior_product(frame.covariant(a), alpha).unwrap();
        claims.claim_zero(&format!("i_(D{}, alpha) = 0 upstairs", a + 1), &c, c.is_zero());
        let c = interior_product(frame.covariant_bar(a), alpha).unwrap();
        claims.claim_zero(&format!("i_(Db{}, alpha) = 0 upstairs", a + 1), &c, c.is_zero());
    }
    for mu in 0..4 {
        let c = interior_product(frame.translation(mu), &d_alpha).unwrap();
        claims.claim_zero(&format!("i_(P{mu}, d(alpha)) = 0 upstairs"), &c, c.is_zero());
    }

    let translations: Vec<VectorField> = (0..4).map(|mu| frame.translation(mu).clone()).collect();
    let (ok, _) = nondegeneracy_check(alpha, &translations).unwrap();
    claims.claim("alpha pairs non-degenerately with the translations", ok);
    let (ok, _) = nondegeneracy_check(&d_alpha, &frame.covariant_basis()).unwrap();
    claims.claim("d(alpha) pairs non-degenerately with span{D, Db}", ok);

    let ch = s.chart();
    let dl_form = ch.gen(ch.fiber_of(s.lambda()).unwrap());
    let dl_field = VectorField::frame(ch, s.lambda()).unwrap();
    let contracted = interior_scalar(&dl_field, &dl_form).unwrap();
    claims.claim_eq("i_(@l, dl) = 1", &contracted, &ch.one());
    claims.into_report()
}

/// The cone: superspace coordinates plus the invertible radial coordinate
/// r and the formal dilation scale t.
pub struct Cone {
    frame: SusyFrame,
    r: GenId,
    varpi: VectorValuedForm,
}

impl Default for Cone {
    fn default() -> Self {
        Self::new()
    }
}

impl Cone {
    pub fn new() -> Self {
        let chart = Chart::builder()
            .base("x0", Parity::Even)
            .base("x1", Parity::Even)
            .base("x2", Parity::Even)
            .base("x3", Parity::Even)
            .base("th1", Parity::Odd)
            .base("th2", Parity::Odd)
            .base("thb1", Parity::Odd)
            .base("thb2", Parity::Odd)
            .invertible_base("r")
            .unit_parameter("t")
            .build()
            .expect("cone chart is well formed");
        let frame = SusyFrame::on_chart(&chart);
        let r = chart.lookup("r").unwrap();
        let r_sq = chart.gen(r).pow(2).unwrap();
        let varpi = exterior_derivative(&frame.alpha().scale_form(&r_sq));
        Cone { frame, r, varpi }
    }

    pub fn chart(&self) -> &Chart {
        self.frame.chart()
    }

    pub fn frame(&self) -> &SusyFrame {
        &self.frame
    }

    pub fn varpi(&self) -> &VectorValuedForm {
        &self.varpi
    }

    /// The dilation r -> t r with the formal invertible scale t.
    pub fn dilation(&self) -> SuperMap {
        let ch = self.chart();
        let t = ch.gen_named("t").unwrap();
        let t_inv = t.pow(-1).expect("t is a unit");
        SuperMap::endomorphism(
            ch,
            [(self.r, &t * &ch.gen(self.r))],
            [(self.r, &t_inv * &ch.gen(self.r))],
        )
        .expect("dilations invert by inverting the scale")
    }

    pub fn coordinate_frame(&self) -> Vec<VectorField> {
        let mut fields = Vec::new();
        for id in self
            .frame
            .susy_base_ids()
            .into_iter()
            .chain(std::iter::once(self.r))
        {
            fields.push(VectorField::frame(self.chart(), id).expect("base coordinate"));
        }
        fields
    }
}

/// varpi = d(r^2 alpha) is closed and non-degenerate, and the dilation
/// acts on it by the exact factor t^2.
pub fn verify_cone(c: &Cone) -> CheckReport {
    let mut claims = ClaimSet::new(
        "cone",
        "varpi = d(r^2 alpha) is closed, non-degenerate, and dilates by t^2",
    );
    let d_varpi = exterior_derivative(c.varpi());
    claims.claim_zero("d(varpi) = 0", &d_varpi, d_varpi.is_zero());

    let (full, _) = nondegeneracy_check(c.varpi(), &c.coordinate_frame()).unwrap();
    claims.claim("body rank full on the coordinate frame", full);

    let dilated = c
        .dilation()
        .transform_vector_valued(c.varpi())
        .expect("varpi lives on the cone chart");
    let ch = c.chart();
    let t_sq = ch.gen_named("t").unwrap().pow(2).unwrap();
    claims.claim_eq(
        "pullback along the dilation equals t^2 varpi",
        &dilated,
        &c.varpi().scale_form(&t_sq),
    );

    // t = 1 is the identity on varpi.
    let mut set_t_one = BTreeMap::new();
    set_t_one.insert(ch.lookup("t").unwrap(), ch.one());
    let mut at_one_comps = BTreeMap::new();
    for (slot, comp) in dilated.components() {
        let v = comp.substitute(&set_t_one).expect("t = 1 is a unit value");
        if !v.is_zero() {
            at_one_comps.insert(*slot, v);
        }
    }
    let at_one = VectorValuedForm::from_components(ch, at_one_comps).unwrap();
    claims.claim_eq("the unit dilation fixes varpi", &at_one, c.varpi());
    claims.into_report()
}
