//! Brute-force reference computations on explicit tensor-product spaces.
//!
//! Everything here is deliberately naive: total ladder operators act on dense
//! state vectors (or dense matrices) over the full product basis, and coupling
//! coefficients come from applying the projector series literally. The closed
//! forms elsewhere in the crate are verified against this module.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{
    factorial_opt, rat_int, CGValue, HalfInt, QuadraticSurd, Rational,
};
use crate::projector::{apply_series, Carrier, ProjectorSpec};
use crate::repkernel::{hermiticity_check, Direction, HermiticityVerdict, IrrepModel};

/// Tensor product of deformed irreps at a common beta2. Basis states are
/// products of the factor basis states, ordered lexicographically with the
/// first factor most significant.
pub struct ProductSpace {
    factors: Vec<IrrepModel>,
    strides: Vec<usize>,
    dim: usize,
    beta2: Rational,
}

impl ProductSpace {
    /// Builds the space, rejecting parameters for which any factor fails the
    /// hermiticity bound beta2 >= -1/(2 j^2). Sitting exactly on the bound is
    /// allowed; the degeneracy then surfaces in downstream prefactors.
    pub fn new(js: &[HalfInt], beta2: Rational) -> Result<Self> {
        if js.is_empty() {
            return Err(Error::InvalidInput("empty factor list".into()));
        }
        let mut factors = Vec::with_capacity(js.len());
        for &j in js {
            if let HermiticityVerdict::Violated = hermiticity_check(j, &beta2) {
                return Err(Error::Hermiticity(format!(
                    "beta2 = {beta2} lies below the bound -1/(2 j^2) for j = {j}"
                )));
            }
            factors.push(IrrepModel::cubic(j, beta2.clone())?);
        }
        let mut strides = vec![0usize; factors.len()];
        let mut dim = 1usize;
        for (i, f) in factors.iter().enumerate().rev() {
            strides[i] = dim;
            dim *= f.dim();
        }
        Ok(ProductSpace { factors, strides, dim, beta2 })
    }

    pub fn factors(&self) -> &[IrrepModel] {
        &self.factors
    }

    pub fn beta2(&self) -> &Rational {
        &self.beta2
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Top weight of the space, sum of the factor spins.
    pub fn max_weight(&self) -> HalfInt {
        self.factors
            .iter()
            .fold(HalfInt::from_int(0), |acc, f| acc + f.j())
    }

    /// Per-factor ladder indices of a basis state.
    pub fn ns_of(&self, index: usize) -> Vec<usize> {
        self.factors
            .iter()
            .zip(&self.strides)
            .map(|(f, &s)| index / s % f.dim())
            .collect()
    }

    pub fn index_of_ns(&self, ns: &[usize]) -> usize {
        ns.iter().zip(&self.strides).map(|(n, s)| n * s).sum()
    }

    /// Weights (m-values) of the factor states of a basis state.
    pub fn ms_of(&self, index: usize) -> Vec<HalfInt> {
        self.factors
            .iter()
            .zip(self.ns_of(index))
            .map(|(f, n)| f.weight_of(n))
            .collect()
    }

    /// Total weight of a basis state.
    pub fn weight_of(&self, index: usize) -> HalfInt {
        self.factors
            .iter()
            .zip(self.ns_of(index))
            .fold(HalfInt::from_int(0), |acc, (f, n)| acc + f.weight_of(n))
    }

    /// Index of the basis state with the given per-factor weights.
    pub fn state_for_ms(&self, ms: &[HalfInt]) -> Result<usize> {
        if ms.len() != self.factors.len() {
            return Err(Error::InvalidInput(format!(
                "expected {} weights, got {}",
                self.factors.len(),
                ms.len()
            )));
        }
        let mut ns = Vec::with_capacity(ms.len());
        for (f, &m) in self.factors.iter().zip(ms) {
            let n = f.index_of_weight(m).ok_or_else(|| {
                Error::InvalidInput(format!("weight {m} absent from irrep j = {}", f.j()))
            })?;
            ns.push(n);
        }
        Ok(self.index_of_ns(&ns))
    }

    fn step(&self, v: &[QuadraticSurd], dir: Direction) -> Result<Vec<QuadraticSurd>> {
        let mut out = vec![QuadraticSurd::zero(); self.dim];
        for (idx, amp) in v.iter().enumerate() {
            if amp.is_zero() {
                continue;
            }
            let ns = self.ns_of(idx);
            for (i, f) in self.factors.iter().enumerate() {
                let c = f.ladder_coeff(ns[i] as i64, dir)?;
                if c.is_zero() {
                    continue;
                }
                let target = match dir {
                    Direction::Up => idx + self.strides[i],
                    Direction::Down => idx - self.strides[i],
                };
                out[target] = out[target].checked_add(&amp.mul(&c))?;
            }
        }
        Ok(out)
    }
}

impl Carrier for ProductSpace {
    fn dim(&self) -> usize {
        self.dim
    }

    fn raise(&self, v: &[QuadraticSurd]) -> Result<Vec<QuadraticSurd>> {
        self.step(v, Direction::Up)
    }

    fn lower(&self, v: &[QuadraticSurd]) -> Result<Vec<QuadraticSurd>> {
        self.step(v, Direction::Down)
    }
}

/// <bra| P_{j,m} |ket> on the product space, with bra and ket given by their
/// per-factor weights. States whose total weight differs from m are outside
/// the domain on which the series represents the projector; the element is
/// defined to vanish there.
pub fn oracle_projector_element(
    space: &ProductSpace,
    spec: &ProjectorSpec,
    bra_ms: &[HalfInt],
    ket_ms: &[HalfInt],
) -> Result<QuadraticSurd> {
    let bra = space.state_for_ms(bra_ms)?;
    let ket = space.state_for_ms(ket_ms)?;
    if space.weight_of(bra) != spec.m || space.weight_of(ket) != spec.m {
        return Ok(QuadraticSurd::zero());
    }
    let mut input = vec![QuadraticSurd::zero(); space.dim()];
    input[ket] = QuadraticSurd::one();
    let image = apply_series(spec, space, &input)?;
    Ok(image[bra].clone())
}

/// Coupling coefficient <j1 m1, j2 m2 | j m> by brute force: the ratio of a
/// projector matrix element against the reference state (m1' = j1) to the
/// square root of the diagonal reference element.
pub fn oracle_cgc(
    j1: HalfInt,
    j2: HalfInt,
    beta2: &Rational,
    j: HalfInt,
    m1: HalfInt,
    m2: HalfInt,
) -> Result<CGValue> {
    let m = m1 + m2;
    validate_cgc_query(j1, j2, j, m1, m2)?;
    let space = ProductSpace::new(&[j1, j2], beta2.clone())?;
    let spec = ProjectorSpec::highest(j, m, beta2.clone())?;
    let ref_ms = [j1, m - j1];
    let den = oracle_projector_element(&space, &spec, &ref_ms, &ref_ms)?;
    let den = den.as_rational().ok_or_else(|| {
        Error::InvalidInput("diagonal projector element is not rational".into())
    })?;
    let num = oracle_projector_element(&space, &spec, &[m1, m2], &ref_ms)?;
    CGValue::from_ratio(&num, &den)
}

/// Shared validation for two-factor coupling queries. The reference state
/// (m1' = j1, m2' = m - j1) must exist in the second factor.
pub fn validate_cgc_query(
    j1: HalfInt,
    j2: HalfInt,
    j: HalfInt,
    m1: HalfInt,
    m2: HalfInt,
) -> Result<()> {
    let m = m1 + m2;
    if j1.is_negative() || j2.is_negative() || j.is_negative() {
        return Err(Error::InvalidInput("negative spin".into()));
    }
    if m1.abs() > j1 || !(j1 - m1).is_integer() {
        return Err(Error::InvalidInput(format!("m1 = {m1} invalid for j1 = {j1}")));
    }
    if m2.abs() > j2 || !(j2 - m2).is_integer() {
        return Err(Error::InvalidInput(format!("m2 = {m2} invalid for j2 = {j2}")));
    }
    if (j1 + j2 - j).as_nonneg_int().is_none()
        || (j - (j1 - j2).abs()).is_negative()
        || m.abs() > j
    {
        return Err(Error::InvalidInput(format!(
            "j = {j}, m = {m} outside the coupled range of j1 = {j1}, j2 = {j2}"
        )));
    }
    if (m - j1).abs() > j2 {
        return Err(Error::InvalidInput(format!(
            "reference state m2' = m - j1 = {} outside factor j2 = {j2}",
            m - j1
        )));
    }
    Ok(())
}

/// Undeformed coupling coefficient in the Condon-Shortley convention, from
/// the classical single-sum formula. Returns zero when the selection rules
/// fail.
pub fn su2_reference_cgc(
    j1: HalfInt,
    j2: HalfInt,
    j: HalfInt,
    m1: HalfInt,
    m2: HalfInt,
) -> Result<CGValue> {
    let m = m1 + m2;
    if m1.abs() > j1
        || m2.abs() > j2
        || !(j1 - m1).is_integer()
        || !(j2 - m2).is_integer()
    {
        return Err(Error::InvalidInput("invalid magnetic quantum numbers".into()));
    }
    let half = |x: HalfInt| x.as_nonneg_int();
    let (Some(t1), Some(t2), Some(t3)) =
        (half(j1 + j2 - j), half(j + j1 - j2), half(j + j2 - j1))
    else {
        return Ok(CGValue::zero());
    };
    if m.abs() > j || !(j - m).is_integer() {
        return Ok(CGValue::zero());
    }
    let fact = |n: i64| factorial_opt(n).map(Rational::from);
    let prefac = rat_int(j.twice() + 1)
        * fact(t1).unwrap()
        * fact(t2).unwrap()
        * fact(t3).unwrap()
        / fact((j1 + j2 + j).as_nonneg_int().unwrap() + 1).unwrap()
        * fact(half(j + m).unwrap()).unwrap()
        * fact(half(j - m).unwrap()).unwrap()
        * fact(half(j1 + m1).unwrap()).unwrap()
        * fact(half(j1 - m1).unwrap()).unwrap()
        * fact(half(j2 + m2).unwrap()).unwrap()
        * fact(half(j2 - m2).unwrap()).unwrap();
    let mut sum = Rational::zero();
    for k in 0..=t1 {
        let denoms = [
            fact(k),
            fact(t1 - k),
            fact((j1 - m1).as_nonneg_int().unwrap() - k),
            fact((j2 + m2).as_nonneg_int().unwrap() - k),
            fact((j - j2 + m1).twice() / 2 + k),
            fact((j - j1 - m2).twice() / 2 + k),
        ];
        let mut term = Rational::one();
        let mut skip = false;
        for d in denoms {
            match d {
                Some(v) => term /= v,
                None => {
                    skip = true;
                    break;
                }
            }
        }
        if skip {
            continue;
        }
        if k % 2 == 1 {
            term = -term;
        }
        sum += term;
    }
    if sum.is_zero() {
        return Ok(CGValue::zero());
    }
    let sign = if sum.is_negative() { -1 } else { 1 };
    CGValue::new(sign, prefac * &sum * &sum)
}

/// Dense operator over a product space with exact surd entries, for direct
/// algebra checks. Row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct SurdOperator {
    dim: usize,
    data: Vec<QuadraticSurd>,
}

impl SurdOperator {
    pub fn zeros(dim: usize) -> Self {
        SurdOperator { dim, data: vec![QuadraticSurd::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut op = Self::zeros(dim);
        for i in 0..dim {
            op.data[i * dim + i] = QuadraticSurd::one();
        }
        op
    }

    pub fn from_diagonal(diag: &[Rational]) -> Self {
        let mut op = Self::zeros(diag.len());
        for (i, d) in diag.iter().enumerate() {
            op.data[i * diag.len() + i] = QuadraticSurd::from_rational(d.clone());
        }
        op
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &QuadraticSurd {
        &self.data[row * self.dim + col]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(QuadraticSurd::is_zero)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        SurdOperator {
            dim: self.dim,
            data: self.data.iter().map(|x| x.scale(s)).collect(),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        assert_eq!(self.dim, other.dim);
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<_>>()?;
        Ok(SurdOperator { dim: self.dim, data })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * n + c;
                    out.data[idx] = out.data[idx].checked_add(&a.mul(b))?;
                }
            }
        }
        Ok(out)
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.checked_sub(&other.mul(self)?)
    }

    pub fn apply(&self, v: &[QuadraticSurd]) -> Result<Vec<QuadraticSurd>> {
        assert_eq!(v.len(), self.dim);
        let mut out = vec![QuadraticSurd::zero(); self.dim];
        for (r, slot) in out.iter_mut().enumerate() {
            for (c, x) in v.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                *slot = slot.checked_add(&self.get(r, c).mul(x))?;
            }
        }
        Ok(out)
    }
}

/// Dense total ladder and weight operators (J_+, J_-, J_0) of a carrier.
pub fn build_ladder_matrices(
    carrier: &impl Carrier,
    weights: &[Rational],
) -> Result<(SurdOperator, SurdOperator, SurdOperator)> {
    let n = carrier.dim();
    assert_eq!(weights.len(), n);
    let mut jp = SurdOperator::zeros(n);
    let mut jm = SurdOperator::zeros(n);
    for col in 0..n {
        let mut e = vec![QuadraticSurd::zero(); n];
        e[col] = QuadraticSurd::one();
        let up = carrier.raise(&e)?;
        let down = carrier.lower(&e)?;
        for row in 0..n {
            jp.data[row * n + col] = up[row].clone();
            jm.data[row * n + col] = down[row].clone();
        }
    }
    let j0 = SurdOperator::from_diagonal(weights);
    Ok((jp, jm, j0))
}

/// Weight diagonal of a product space in basis order.
pub fn product_weights(space: &ProductSpace) -> Vec<Rational> {
    (0..space.dim())
        .map(|i| space.weight_of(i).to_rational())
        .collect()
}
