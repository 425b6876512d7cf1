//! The coframe of the equivalence problem on `(x, y, u)` space and its
//! structure equations, evaluated exactly at rational points.
//!
//! With `f(x, y) = c0 + 3 c1 y + 3 c2 y² + c3 y³` the coframe is
//!
//! ```text
//! θ1 = -(u/f)(dy - f dx),   θ2 = -(u/f) dx,
//! ϖ  = du/u - (f_x/f) dx - (f_y/f)(dy - f dx).
//! ```
//!
//! Each component is carried as a first-order dual number in `(x, y, u)`,
//! seeded from closed-form partials of `f`, so exterior derivatives come out
//! exactly. There are no difference quotients anywhere.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::equation::{AbelEquation, ChartedEquation};
use crate::error::{Error, Result};
use crate::invariants::s3;
use crate::series::{integer, Jet, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointXYU {
    pub x: Rational,
    pub y: Rational,
    pub u: Rational,
}

impl PointXYU {
    pub fn new(x: Rational, y: Rational, u: Rational) -> Result<Self> {
        if u.is_zero() {
            return Err(Error::Domain("fiber coordinate u must be nonzero".into()));
        }
        Ok(Self { x, y, u })
    }
}

/// Components on `(dx, dy, du)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OneForm {
    pub dx: Rational,
    pub dy: Rational,
    pub du: Rational,
}

/// Components on `(dx∧dy, dx∧du, dy∧du)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwoForm {
    pub dx_dy: Rational,
    pub dx_du: Rational,
    pub dy_du: Rational,
}

/// Components on `(∂x, ∂y, ∂u)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FrameVector {
    pub dx: Rational,
    pub dy: Rational,
    pub du: Rational,
}

impl OneForm {
    pub fn new(dx: Rational, dy: Rational, du: Rational) -> Self {
        Self { dx, dy, du }
    }

    pub fn wedge(&self, other: &OneForm) -> TwoForm {
        TwoForm {
            dx_dy: &self.dx * &other.dy - &self.dy * &other.dx,
            dx_du: &self.dx * &other.du - &self.du * &other.dx,
            dy_du: &self.dy * &other.du - &self.du * &other.dy,
        }
    }

    pub fn pair(&self, v: &FrameVector) -> Rational {
        &self.dx * &v.dx + &self.dy * &v.dy + &self.du * &v.du
    }
}

impl TwoForm {
    pub fn is_zero(&self) -> bool {
        self.dx_dy.is_zero() && self.dx_du.is_zero() && self.dy_du.is_zero()
    }

    pub fn scale(&self, q: &Rational) -> TwoForm {
        TwoForm { dx_dy: &self.dx_dy * q, dx_du: &self.dx_du * q, dy_du: &self.dy_du * q }
    }
}

impl Sub for &TwoForm {
    type Output = TwoForm;
    fn sub(self, rhs: &TwoForm) -> TwoForm {
        TwoForm {
            dx_dy: &self.dx_dy - &rhs.dx_dy,
            dx_du: &self.dx_du - &rhs.dx_du,
            dy_du: &self.dy_du - &rhs.dy_du,
        }
    }
}

/// A value with its first partials in `x`, `y`, `u`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Dual {
    pub value: Rational,
    pub dx: Rational,
    pub dy: Rational,
    pub du: Rational,
}

impl Dual {
    pub fn new(value: Rational, dx: Rational, dy: Rational, du: Rational) -> Self {
        Self { value, dx, dy, du }
    }

    pub fn constant(value: Rational) -> Self {
        Self { value, ..Self::default() }
    }

    pub fn recip(&self) -> Dual {
        let inv = self.value.recip();
        let inv2 = &inv * &inv;
        Dual {
            value: inv,
            dx: -&self.dx * &inv2,
            dy: -&self.dy * &inv2,
            du: -&self.du * &inv2,
        }
    }

    pub fn scale(&self, q: &Rational) -> Dual {
        Dual { value: &self.value * q, dx: &self.dx * q, dy: &self.dy * q, du: &self.du * q }
    }
}

impl Add for &Dual {
    type Output = Dual;
    fn add(self, rhs: &Dual) -> Dual {
        Dual {
            value: &self.value + &rhs.value,
            dx: &self.dx + &rhs.dx,
            dy: &self.dy + &rhs.dy,
            du: &self.du + &rhs.du,
        }
    }
}

impl Sub for &Dual {
    type Output = Dual;
    fn sub(self, rhs: &Dual) -> Dual {
        self + &-rhs
    }
}

impl Neg for &Dual {
    type Output = Dual;
    fn neg(self) -> Dual {
        Dual { value: -&self.value, dx: -&self.dx, dy: -&self.dy, du: -&self.du }
    }
}

impl Mul for &Dual {
    type Output = Dual;
    fn mul(self, rhs: &Dual) -> Dual {
        Dual {
            value: &self.value * &rhs.value,
            dx: &self.dx * &rhs.value + &self.value * &rhs.dx,
            dy: &self.dy * &rhs.value + &self.value * &rhs.dy,
            du: &self.du * &rhs.value + &self.value * &rhs.du,
        }
    }
}

/// A one-form whose components carry their first partials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormJet {
    pub dx: Dual,
    pub dy: Dual,
    pub du: Dual,
}

impl FormJet {
    pub fn value(&self) -> OneForm {
        OneForm::new(self.dx.value.clone(), self.dy.value.clone(), self.du.value.clone())
    }

    /// `d(A dx + B dy + C du) = (B_x - A_y) dx∧dy + (C_x - A_u) dx∧du + (C_y - B_u) dy∧du`.
    pub fn exterior_derivative(&self) -> TwoForm {
        TwoForm {
            dx_dy: &self.dy.dx - &self.dx.dy,
            dx_du: &self.du.dx - &self.dx.du,
            dy_du: &self.du.dy - &self.dy.du,
        }
    }
}

/// `f` and its partials at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partials {
    pub f: Rational,
    pub f_x: Rational,
    pub f_y: Rational,
    pub f_xx: Rational,
    pub f_xy: Rational,
    pub f_yy: Rational,
    pub f_xyy: Rational,
    pub f_yyy: Rational,
}

/// Partials of `f` in closed form. Never fails; see [`partials`] for the
/// checked version used by the coframe.
pub fn f_partials(eq: &AbelEquation, x: &Rational, y: &Rational) -> Partials {
    let weights = [1, 3, 3, 1];
    let mut a = Vec::with_capacity(4);
    let mut a1 = Vec::with_capacity(4);
    let mut a2 = Vec::with_capacity(4);
    for (c, w) in eq.coefficients().iter().zip(weights) {
        let scaled = c * w;
        let d1 = scaled.differentiate();
        let d2 = d1.differentiate();
        a.push(scaled.eval(x));
        a1.push(d1.eval(x));
        a2.push(d2.eval(x));
    }
    // y-derivatives of the monomials y^i
    let pw: Vec<Rational> = (0..4).map(|i| num_traits::pow(y.clone(), i)).collect();
    let dy = |i: usize, times: usize| -> Rational {
        if i < times {
            return Rational::zero();
        }
        let falling: i64 = (0..times).map(|j| (i - j) as i64).product();
        &pw[i - times] * integer(falling)
    };
    let sum = |coef: &[Rational], times: usize| -> Rational {
        coef.iter().enumerate().map(|(i, c)| c * dy(i, times)).sum()
    };
    Partials {
        f: sum(&a, 0),
        f_x: sum(&a1, 0),
        f_y: sum(&a, 1),
        f_xx: sum(&a2, 0),
        f_xy: sum(&a1, 1),
        f_yy: sum(&a, 2),
        f_xyy: sum(&a1, 2),
        f_yyy: sum(&a, 3),
    }
}

pub fn partials(eq: &AbelEquation, p: &PointXYU) -> Result<Partials> {
    let out = f_partials(eq, &p.x, &p.y);
    if out.f.is_zero() {
        return Err(Error::ZeroF);
    }
    Ok(out)
}

/// The coframe `(θ1, θ2, ϖ)` with first partials of every component.
pub fn coframe_jets(eq: &AbelEquation, p: &PointXYU) -> Result<[FormJet; 3]> {
    let d = partials(eq, p)?;
    let zero = Rational::zero;
    let f = Dual::new(d.f.clone(), d.f_x.clone(), d.f_y.clone(), zero());
    let fx = Dual::new(d.f_x.clone(), d.f_xx.clone(), d.f_xy.clone(), zero());
    let fy = Dual::new(d.f_y.clone(), d.f_xy.clone(), d.f_yy.clone(), zero());
    let u = Dual::new(p.u.clone(), zero(), zero(), Rational::one());
    let inv_f = f.recip();
    let u_over_f = &u * &inv_f;

    let theta1 = FormJet { dx: u.clone(), dy: -&u_over_f, du: Dual::default() };
    let theta2 = FormJet { dx: -&u_over_f, dy: Dual::default(), du: Dual::default() };
    let fy_over_f = &fy * &inv_f;
    let varpi = FormJet {
        dx: &fy - &(&fx * &inv_f),
        dy: -&fy_over_f,
        du: u.recip(),
    };
    Ok([theta1, theta2, varpi])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coframe {
    pub theta1: OneForm,
    pub theta2: OneForm,
    pub varpi: OneForm,
}

pub fn coframe(eq: &AbelEquation, p: &PointXYU) -> Result<Coframe> {
    let [t1, t2, w] = coframe_jets(eq, p)?;
    Ok(Coframe { theta1: t1.value(), theta2: t2.value(), varpi: w.value() })
}

/// `dθ1 - ϖ∧θ1`, `dθ2 - ϖ∧θ2`, `dϖ - I θ1∧θ2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureResiduals {
    pub theta1: TwoForm,
    pub theta2: TwoForm,
    pub varpi: TwoForm,
}

impl StructureResiduals {
    pub fn all_zero(&self) -> bool {
        self.theta1.is_zero() && self.theta2.is_zero() && self.varpi.is_zero()
    }
}

pub fn structure_residuals(eq: &AbelEquation, p: &PointXYU) -> Result<StructureResiduals> {
    structure_residuals_perturbed(eq, p, &OneForm::default())
}

/// Residuals with `ϖ` replaced by `ϖ + shift` for a constant one-form
/// `shift`. A zero shift gives [`structure_residuals`].
pub fn structure_residuals_perturbed(
    eq: &AbelEquation,
    p: &PointXYU,
    shift: &OneForm,
) -> Result<StructureResiduals> {
    let [t1, t2, w] = coframe_jets(eq, p)?;
    let (theta1, theta2) = (t1.value(), t2.value());
    let mut varpi = w.value();
    varpi.dx += &shift.dx;
    varpi.dy += &shift.dy;
    varpi.du += &shift.du;
    let i = invariant_i(eq, p);
    Ok(StructureResiduals {
        theta1: &t1.exterior_derivative() - &varpi.wedge(&theta1),
        theta2: &t2.exterior_derivative() - &varpi.wedge(&theta2),
        varpi: &w.exterior_derivative() - &theta1.wedge(&theta2).scale(&i),
    })
}

/// `I = f f_yy / u²`.
pub fn invariant_i(eq: &AbelEquation, p: &PointXYU) -> Rational {
    let d = f_partials(eq, &p.x, &p.y);
    d.f * d.f_yy / (&p.u * &p.u)
}

/// The coefficient `K` with `dϖ = K θ1∧θ2` for this coframe, `f² f_yy / u²`.
pub fn varpi_curvature(eq: &AbelEquation, p: &PointXYU) -> Rational {
    let d = f_partials(eq, &p.x, &p.y);
    &d.f * &d.f * d.f_yy / (&p.u * &p.u)
}

/// The frame dual to `(θ1, θ2, ϖ)`:
/// `X¹ = -(f/u)∂y - f_y ∂u`, `X² = -(f/u)(∂x + f ∂y) - f_x ∂u`, `X³ = u ∂u`.
pub fn dual_frame(eq: &AbelEquation, p: &PointXYU) -> Result<[FrameVector; 3]> {
    let d = partials(eq, p)?;
    let f_over_u = &d.f / &p.u;
    let x1 = FrameVector { dx: Rational::zero(), dy: -&f_over_u, du: -&d.f_y };
    let x2 = FrameVector { dx: -&f_over_u, dy: -(&f_over_u * &d.f), du: -&d.f_x };
    let x3 = FrameVector { dx: Rational::zero(), dy: Rational::zero(), du: p.u.clone() };
    Ok([x1, x2, x3])
}

/// `⟨form_i, X_j⟩` with rows `(θ1, θ2, ϖ)` and columns `(X¹, X², X³)`.
pub fn duality_matrix(eq: &AbelEquation, p: &PointXYU) -> Result<[[Rational; 3]; 3]> {
    let c = coframe(eq, p)?;
    let frame = dual_frame(eq, p)?;
    let forms = [&c.theta1, &c.theta2, &c.varpi];
    Ok(std::array::from_fn(|i| std::array::from_fn(|j| forms[i].pair(&frame[j]))))
}

/// Directional derivatives `X¹(I), X²(I), X³(I)` from closed-form partials.
pub fn frame_derivatives_of_i(eq: &AbelEquation, p: &PointXYU) -> Result<[Rational; 3]> {
    let d = partials(eq, p)?;
    let u2 = &p.u * &p.u;
    let grad = [
        (&d.f_x * &d.f_yy + &d.f * &d.f_xyy) / &u2,
        (&d.f_y * &d.f_yy + &d.f * &d.f_yyy) / &u2,
        -(integer(2) * &d.f * &d.f_yy) / (&u2 * &p.u),
    ];
    let frame = dual_frame(eq, p)?;
    Ok(std::array::from_fn(|j| &grad[0] * &frame[j].dx + &grad[1] * &frame[j].dy + &grad[2] * &frame[j].du))
}

/// Both sides of the equivalence "`y = -c2/c3` solves the equation iff
/// `s3 ≡ 0`", each decided up to the valid order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemarkCheck {
    pub is_solution: bool,
    pub s3_vanishes: bool,
}

impl RemarkCheck {
    pub fn agree(&self) -> bool {
        self.is_solution == self.s3_vanishes
    }
}

pub fn s3_remark_check(eq: &AbelEquation) -> RemarkCheck {
    let charted = ChartedEquation::original(eq.clone());
    let y = -eq.c2().checked_div(eq.c3()).expect("c3 has a nonzero constant term");
    let lhs = charted.derive(&y);
    let rhs = charted.rhs(&y).expect("orders match");
    let is_solution = lhs.agrees_with(&rhs);
    let s3_vanishes = s3(&charted).agrees_with(&Jet::zero(eq.order()));
    RemarkCheck { is_solution, s3_vanishes }
}
