//! The projection operator onto a coupled state |j, m>: series coefficients,
//! normalization, the exact series cutoff, and application of the operator to
//! vectors over any carrier with ladder actions.
//!
//! The series runs over terms J_-^{j-m+l} J_+^{j-m+l} (highest variant) or
//! J_+^{j+m+l} J_-^{j+m+l} (lowest variant). On a finite carrier the raising
//! chain dies once it overshoots the top weight, so the formally infinite sum
//! truncates exactly; no tolerance is involved.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{
    factorial_rat, gen_factorial, pochhammer, rat_int, HalfInt, QuadraticSurd, Rational,
};
use crate::repkernel::{a_pair_factor, b_pair_factor, Direction, IrrepModel};

/// Which extremal-state derivation the operator is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// Series in J_-^a J_+^a, anchored on the highest state.
    Highest,
    /// Series in J_+^a J_-^a, anchored on the lowest state.
    Lowest,
}

/// Target of a projection: spin j, weight m, deformation parameter, variant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectorSpec {
    pub j: HalfInt,
    pub m: HalfInt,
    pub beta2: Rational,
    pub variant: Variant,
}

impl ProjectorSpec {
    pub fn new(j: HalfInt, m: HalfInt, beta2: Rational, variant: Variant) -> Result<Self> {
        if j.is_negative() || m.abs() > j || !(j - m).is_integer() {
            return Err(Error::InvalidInput(format!(
                "invalid projector target (j = {j}, m = {m})"
            )));
        }
        Ok(ProjectorSpec { j, m, beta2, variant })
    }

    pub fn highest(j: HalfInt, m: HalfInt, beta2: Rational) -> Result<Self> {
        Self::new(j, m, beta2, Variant::Highest)
    }
}

/// Product of the b-pair factor values at 1..=l, i.e. [xi(b)_l]!, with a
/// named error at the first vanishing factor: the series coefficient is
/// genuinely undefined there.
pub(crate) fn b_factorial_checked(j: HalfInt, beta2: &Rational, l: u32) -> Result<Rational> {
    let q = b_pair_factor(j, beta2);
    let mut acc = Rational::one();
    for k in 1..=l {
        let v = q.eval_int(k as i64);
        if v.is_zero() {
            return Err(Error::DegenerateParameter { l: k });
        }
        acc *= v;
    }
    Ok(acc)
}

/// Series coefficient C_l = (-1)^l / (l! (2j+2)_l [xi(b)_l]!), with C_0 = 1.
pub fn proj_coeff(j: HalfInt, beta2: &Rational, l: u32) -> Result<Rational> {
    let denom = factorial_rat(l as i64)
        * pochhammer(&rat_int(j.twice() + 2), l)
        * b_factorial_checked(j, beta2, l)?;
    let sign = if l % 2 == 0 { Rational::one() } else { -Rational::one() };
    Ok(sign / denom)
}

/// Normalization for the arbitrary-state projector:
/// N = (j+m)! / ((j-m)! (2j)!) * [xi(a)_{j+m}]! / [xi(a)_{2j}]!.
pub fn normalization_n(j: HalfInt, m: HalfInt, beta2: &Rational) -> Result<Rational> {
    let j_plus_m = (j + m)
        .as_nonneg_int()
        .ok_or_else(|| Error::InvalidInput(format!("invalid (j, m) = ({j}, {m})")))?;
    let j_minus_m = (j - m)
        .as_nonneg_int()
        .ok_or_else(|| Error::InvalidInput(format!("invalid (j, m) = ({j}, {m})")))?;
    let a = a_pair_factor(j, beta2);
    let top = gen_factorial(&a, j.twice() as u32);
    if top.is_zero() {
        return Err(Error::DegenerateRepresentation(format!(
            "[xi(a)_2j]! vanishes for j = {j}: representation degenerates at this beta2"
        )));
    }
    Ok(factorial_rat(j_plus_m) / (factorial_rat(j_minus_m) * factorial_rat(j.twice()))
        * gen_factorial(&a, j_plus_m as u32)
        / top)
}

/// Least l_max such that every term with l > l_max annihilates all weight-m
/// states of a carrier whose top weight is `carrier_max_weight`. Raising a
/// weight-m state j - m + l times lands at weight j + l, which exceeds the
/// top weight exactly when l > M - j.
pub fn series_bound(spec: &ProjectorSpec, carrier_max_weight: HalfInt) -> Result<u32> {
    let excess = (carrier_max_weight - spec.j).as_nonneg_int().ok_or_else(|| {
        Error::InvalidInput(format!(
            "carrier top weight {carrier_max_weight} does not reach j = {} by integer steps",
            spec.j
        ))
    })?;
    Ok(excess as u32)
}

/// Anything the projector series can act on: a vector space with total
/// raising and lowering maps built from exact ladder coefficients.
pub trait Carrier {
    fn dim(&self) -> usize;
    fn raise(&self, v: &[QuadraticSurd]) -> Result<Vec<QuadraticSurd>>;
    fn lower(&self, v: &[QuadraticSurd]) -> Result<Vec<QuadraticSurd>>;
}

fn vec_is_zero(v: &[QuadraticSurd]) -> bool {
    v.iter().all(QuadraticSurd::is_zero)
}

fn vec_add_scaled(
    acc: &mut [QuadraticSurd],
    term: &[QuadraticSurd],
    scale: &Rational,
) -> Result<()> {
    for (a, t) in acc.iter_mut().zip(term) {
        *a = a.checked_add(&t.scale(scale))?;
    }
    Ok(())
}

/// Applies the projector series to a vector over any carrier. The input must
/// be homogeneous in weight m (the caller's responsibility); terms are added
/// until the leading ladder chain annihilates the vector.
pub fn apply_series(
    spec: &ProjectorSpec,
    carrier: &impl Carrier,
    input: &[QuadraticSurd],
) -> Result<Vec<QuadraticSurd>> {
    let raise_first = matches!(spec.variant, Variant::Highest);
    let steps_in = match spec.variant {
        Variant::Highest => (spec.j - spec.m).as_nonneg_int(),
        Variant::Lowest => (spec.j + spec.m).as_nonneg_int(),
    }
    .expect("validated spec");
    let first_op = |v: &[QuadraticSurd]| {
        if raise_first {
            carrier.raise(v)
        } else {
            carrier.lower(v)
        }
    };
    let second_op = |v: &[QuadraticSurd]| {
        if raise_first {
            carrier.lower(v)
        } else {
            carrier.raise(v)
        }
    };

    let prefactor = projector_prefactor(spec)?;
    let b = b_pair_factor(spec.j, &spec.beta2);

    let mut result = vec![QuadraticSurd::zero(); carrier.dim()];
    // chain = first_op^{steps_in + l} applied to the input
    let mut chain = input.to_vec();
    for _ in 0..steps_in {
        chain = first_op(&chain)?;
    }
    let mut l: u32 = 0;
    let mut l_factorial = Rational::one();
    let mut b_factorial = Rational::one();
    loop {
        if vec_is_zero(&chain) {
            break;
        }
        if l > 0 {
            l_factorial *= rat_int(l as i64);
            let v = b.eval_int(l as i64);
            if v.is_zero() {
                return Err(Error::DegenerateParameter { l });
            }
            b_factorial *= v;
        }
        let mut term = chain.clone();
        for _ in 0..(steps_in as u32 + l) {
            term = second_op(&term)?;
        }
        let sign = if l % 2 == 0 { Rational::one() } else { -Rational::one() };
        let coeff = sign * &prefactor
            / (&l_factorial * factorial_rat(spec.j.twice() + l as i64 + 1) * &b_factorial);
        vec_add_scaled(&mut result, &term, &coeff)?;

        chain = first_op(&chain)?;
        l += 1;
    }
    Ok(result)
}

/// Prefactor (2j+1) (j +/- m)! / (j -/+ m)! * [xi(a)_{j +/- m}]! / [xi(a)_{2j}]!
/// shared by both variants (upper signs: highest).
pub(crate) fn projector_prefactor(spec: &ProjectorSpec) -> Result<Rational> {
    let (near, far) = match spec.variant {
        Variant::Highest => (spec.j + spec.m, spec.j - spec.m),
        Variant::Lowest => (spec.j - spec.m, spec.j + spec.m),
    };
    let near = near.as_nonneg_int().expect("validated spec");
    let far = far.as_nonneg_int().expect("validated spec");
    let a = a_pair_factor(spec.j, &spec.beta2);
    let top = gen_factorial(&a, spec.j.twice() as u32);
    if top.is_zero() {
        return Err(Error::DegenerateRepresentation(format!(
            "[xi(a)_2j]! vanishes for j = {}: representation degenerates at this beta2",
            spec.j
        )));
    }
    Ok(rat_int(spec.j.twice() + 1) * factorial_rat(near) / factorial_rat(far)
        * gen_factorial(&a, near as u32)
        / top)
}

/// Single-irrep carrier: the ladder actions of one representation.
pub struct IrrepCarrier<'a> {
    model: &'a IrrepModel,
}

impl<'a> IrrepCarrier<'a> {
    pub fn new(model: &'a IrrepModel) -> Self {
        IrrepCarrier { model }
    }

    fn step(&self, v: &[QuadraticSurd], dir: Direction) -> Result<Vec<QuadraticSurd>> {
        let mut out = vec![QuadraticSurd::zero(); v.len()];
        for (n, amp) in v.iter().enumerate() {
            if amp.is_zero() {
                continue;
            }
            let c = self.model.ladder_coeff(n as i64, dir)?;
            if c.is_zero() {
                continue;
            }
            let target = match dir {
                Direction::Up => n + 1,
                Direction::Down => n - 1,
            };
            out[target] = out[target].checked_add(&amp.mul(&c))?;
        }
        Ok(out)
    }
}

impl Carrier for IrrepCarrier<'_> {
    fn dim(&self) -> usize {
        self.model.dim()
    }

    fn raise(&self, v: &[QuadraticSurd]) -> Result<Vec<QuadraticSurd>> {
        self.step(v, Direction::Up)
    }

    fn lower(&self, v: &[QuadraticSurd]) -> Result<Vec<QuadraticSurd>> {
        self.step(v, Direction::Down)
    }
}

/// Applies the projector to a basis state of a single irrep and returns the
/// amplitudes over that irrep. With spec.j equal to the model's spin this
/// realizes the defining conditions: the projector fixes |j, m> and the
/// raised (highest variant) image of the top state vanishes.
pub fn apply_projector_irrep(
    spec: &ProjectorSpec,
    model: &IrrepModel,
    state_index: usize,
) -> Result<Vec<QuadraticSurd>> {
    if spec.j != model.j() {
        return Err(Error::InvalidInput(format!(
            "single-irrep carrier requires spec.j = model.j (got {} vs {})",
            spec.j,
            model.j()
        )));
    }
    if model.beta2()? != &spec.beta2 {
        return Err(Error::InvalidInput("spec and model disagree on beta2".into()));
    }
    if state_index >= model.dim() {
        return Err(Error::InvalidInput(format!(
            "state index {state_index} outside irrep of dimension {}",
            model.dim()
        )));
    }
    let carrier = IrrepCarrier::new(model);
    let mut input = vec![QuadraticSurd::zero(); model.dim()];
    input[state_index] = QuadraticSurd::one();
    apply_series(spec, &carrier, &input)
}
