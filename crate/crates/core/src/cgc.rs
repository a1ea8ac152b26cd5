//! Closed-form coupling coefficients.
//!
//! The general-N matrix element of the projector factorizes into per-factor
//! data (f0 factors and the rational P_k corrections) and a double sum; for
//! two factors, specializing the bra to the reference state (m1' = j1) gives
//! the coefficient as a numerator over the square root of a diagonal element.
//! Both quantities collapse to single sums, and the denominator sum is a
//! terminating 4F3 whose paired parameters are root pairs of quadratics, so
//! every term stays rational.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{
    binomial, factorial_rat, gen_factorial, pochhammer, rat_int, CGValue, Factored,
    HalfInt, QuadraticFactor, QuadraticSurd, Rational,
};
use crate::oracle::validate_cgc_query;
use crate::projector::{projector_prefactor, ProjectorSpec, Variant};
use crate::repkernel::{a_pair_factor, b_pair_factor, IrrepModel};

/// A validated two-factor coupling query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CgcQuery {
    pub j1: HalfInt,
    pub j2: HalfInt,
    pub j: HalfInt,
    pub m1: HalfInt,
    pub m2: HalfInt,
    pub beta2: Rational,
}

impl CgcQuery {
    pub fn new(
        j1: HalfInt,
        j2: HalfInt,
        j: HalfInt,
        m1: HalfInt,
        m2: HalfInt,
        beta2: Rational,
    ) -> Result<Self> {
        validate_cgc_query(j1, j2, j, m1, m2)?;
        Ok(CgcQuery { j1, j2, j, m1, m2, beta2 })
    }

    pub fn m(&self) -> HalfInt {
        self.m1 + self.m2
    }

    /// j1 + j2 - j, the depth of the coupled spin below the stretched one.
    pub fn k_depth(&self) -> i64 {
        (self.j1 + self.j2 - self.j).as_nonneg_int().expect("validated query")
    }
}

/// Which of the two equivalent denominator expressions to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DenominatorForm {
    DirectSum,
    Hypergeometric,
}

/// Integer value of a HalfInt known to be integral in context.
fn ii(x: HalfInt) -> i64 {
    x.as_int().expect("integer-valued half-integer")
}

/// [xi(a)_n]! of a factor's own a-pair, with the boundary degeneracy named.
fn a_bracket(j: HalfInt, beta2: &Rational, n: i64) -> Result<Rational> {
    debug_assert!(n >= 0);
    let v = gen_factorial(&a_pair_factor(j, beta2), n as u32);
    if v.is_zero() {
        return Err(Error::DegenerateRepresentation(format!(
            "[xi(a)_{n}]! vanishes for j = {j}: representation degenerates at this beta2"
        )));
    }
    Ok(v)
}

/// [xi(b)_n]! of the coupled spin, reporting the first vanishing factor.
fn b_bracket(j: HalfInt, beta2: &Rational, n: i64) -> Result<Rational> {
    crate::projector::b_factorial_checked(j, beta2, n as u32)
}

/// Generalized factorials of a shifted pair, tabulated up to `top`. Entry k
/// is the product of the factor values at 1..=k.
fn shifted_table(base: &QuadraticFactor, shift: i64, top: i64) -> Vec<Rational> {
    let q = base.shift_reflect(&rat_int(shift));
    (0..=top as u32).map(|k| gen_factorial(&q, k)).collect()
}

/// The k-independent part of a factor's contribution to the matrix element:
/// f0 = sqrt(C(2j, j-m') C(2j, j-m)) [xi(a)_2j]! / sqrt([xi(a)_{j+m'}]! [xi(a)_{j+m}]!).
pub fn f0_factor(model: &IrrepModel, m_prime: HalfInt, m: HalfInt) -> Result<QuadraticSurd> {
    let j = model.j();
    let beta2 = model.beta2()?.clone();
    if m.abs() > j || m_prime.abs() > j || !(j - m).is_integer() || !(j - m_prime).is_integer()
    {
        return Err(Error::InvalidInput(format!(
            "weights ({m_prime}, {m}) invalid for j = {j}"
        )));
    }
    let b1 = binomial(j.twice(), ii(j - m_prime));
    let b2 = binomial(j.twice(), ii(j - m));
    let radicand = Rational::from_integer(b1 * b2)
        / (a_bracket(j, &beta2, ii(j + m_prime))? * a_bracket(j, &beta2, ii(j + m))?);
    let top = gen_factorial(&a_pair_factor(j, &beta2), j.twice() as u32);
    Ok(QuadraticSurd::sqrt_rational(&radicand)?.scale(&top))
}

/// The k-dependent rational correction
/// P_k = ((-1)^k / k!) [-(j-m)]_k [-(j-m')]_k / ((-2j)_k [xi(A)_k]!)
/// with A the a-pair reflected through the shift by 2j.
pub fn pk_factor(
    model: &IrrepModel,
    m_prime: HalfInt,
    m: HalfInt,
    k: u32,
) -> Result<Rational> {
    let j = model.j();
    let beta2 = model.beta2()?.clone();
    let cap = ii(j - m_prime).min(ii(j - m));
    if (k as i64) > cap {
        return Err(Error::InvalidInput(format!(
            "k = {k} exceeds min(j - m', j - m) = {cap}"
        )));
    }
    let a_shifted = a_pair_factor(j, &beta2).shift_reflect(&rat_int(j.twice()));
    let bracket = gen_factorial(&a_shifted, k);
    if bracket.is_zero() {
        return Err(Error::DegenerateRepresentation(format!(
            "[xi(A)_{k}]! vanishes for j = {j}"
        )));
    }
    let sign = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
    Ok(sign / factorial_rat(k as i64)
        * pochhammer(&rat_int(-ii(j - m)), k)
        * pochhammer(&rat_int(-ii(j - m_prime)), k)
        / (pochhammer(&rat_int(-j.twice()), k) * bracket))
}

/// Sum over per-factor k-tuples with the given caps and fixed total of the
/// products of tabulated P_k values.
fn tuple_sum(pk: &[Vec<Rational>], idx: usize, remaining: i64) -> Rational {
    if remaining < 0 {
        return Rational::zero();
    }
    if idx == pk.len() {
        return if remaining == 0 { Rational::one() } else { Rational::zero() };
    }
    let mut acc = Rational::zero();
    for (k, p) in pk[idx].iter().enumerate() {
        if (k as i64) > remaining {
            break;
        }
        acc += p * tuple_sum(pk, idx + 1, remaining - k as i64);
    }
    acc
}

/// Closed-form matrix element <m'|P_{j,m}|m> over a product of any number of
/// factors (highest variant). Zero when either weight tuple does not sum to
/// m; exactly equal to the brute-force element otherwise.
pub fn matrix_element_m(
    factors: &[IrrepModel],
    spec: &ProjectorSpec,
    m_primes: &[HalfInt],
    ms: &[HalfInt],
) -> Result<QuadraticSurd> {
    if spec.variant != Variant::Highest {
        return Err(Error::InvalidInput(
            "closed-form matrix element covers the highest variant only".into(),
        ));
    }
    if factors.len() != m_primes.len() || factors.len() != ms.len() || factors.is_empty() {
        return Err(Error::InvalidInput("factor/weight arity mismatch".into()));
    }
    let mut j_bold = HalfInt::from_int(0);
    for ((f, &mp), &mv) in factors.iter().zip(m_primes).zip(ms) {
        if f.beta2()? != &spec.beta2 {
            return Err(Error::InvalidInput("factors and spec disagree on beta2".into()));
        }
        let j = f.j();
        if mp.abs() > j || mv.abs() > j || !(j - mp).is_integer() || !(j - mv).is_integer() {
            return Err(Error::InvalidInput(format!(
                "weights ({mp}, {mv}) invalid for j = {j}"
            )));
        }
        j_bold = j_bold + j;
    }
    let total = |ws: &[HalfInt]| ws.iter().fold(HalfInt::from_int(0), |a, &w| a + w);
    if total(m_primes) != spec.m || total(ms) != spec.m {
        return Ok(QuadraticSurd::zero());
    }
    let Some(l_max) = (j_bold - spec.j).as_nonneg_int() else {
        return Ok(QuadraticSurd::zero());
    };

    let prefactor = projector_prefactor(spec)?;
    let mut f0_prod = QuadraticSurd::one();
    let mut pk_tables: Vec<Vec<Rational>> = Vec::with_capacity(factors.len());
    for ((f, &mp), &mv) in factors.iter().zip(m_primes).zip(ms) {
        f0_prod = f0_prod.mul(&f0_factor(f, mp, mv)?);
        let cap = ii(f.j() - mp).min(ii(f.j() - mv));
        let table = (0..=cap as u32)
            .map(|k| pk_factor(f, mp, mv, k))
            .collect::<Result<Vec<_>>>()?;
        pk_tables.push(table);
    }

    let b = b_pair_factor(spec.j, &spec.beta2);
    let j_minus_m = ii(spec.j - spec.m);
    let mut sum = Rational::zero();
    let mut l_factorial = Rational::one();
    let mut b_factorial = Rational::one();
    for l in 0..=l_max {
        if l > 0 {
            l_factorial *= rat_int(l);
            let v = b.eval_int(l);
            if v.is_zero() {
                return Err(Error::DegenerateParameter { l: l as u32 });
            }
            b_factorial *= v;
        }
        let inner = tuple_sum(&pk_tables, 0, l_max - l);
        let jml = factorial_rat(j_minus_m + l);
        let sign = if l % 2 == 0 { Rational::one() } else { -Rational::one() };
        let term = sign / &l_factorial * &jml * &jml
            / (factorial_rat(spec.j.twice() + l + 1) * &b_factorial)
            * inner;
        sum += term;
    }
    Ok(f0_prod.scale(&(prefactor * sum)))
}

/// The single-sum S shared by the simplified numerator and the final closed
/// form:
/// S = sum_k (-1)^k/k! (j1+j2-m-k)! (2j2-k)! / ((K-k)! (j1+j2+j+1-k)! (j2-m2-k)!)
///     * [xi(B)_k]! / [xi(A)_k]!.
fn s_sum(q: &CgcQuery) -> Result<Rational> {
    let kk = q.k_depth();
    let m = q.m();
    let k_max = ii(q.j2 - q.m2).min(kk);
    let a_table = shifted_table(&a_pair_factor(q.j2, &q.beta2), q.j2.twice(), k_max);
    let b_table = shifted_table(&b_pair_factor(q.j, &q.beta2), kk, k_max);
    let j12m = ii(q.j1 + q.j2 - m);
    let tj2 = q.j2.twice();
    let jsum1 = (q.j1 + q.j2 + q.j).as_nonneg_int().unwrap() + 1;
    let j2m2 = ii(q.j2 - q.m2);
    let mut acc = Rational::zero();
    for k in 0..=k_max {
        let a_k = &a_table[k as usize];
        if a_k.is_zero() {
            return Err(Error::DegenerateRepresentation(format!(
                "[xi(A)_{k}]! vanishes for j2 = {}",
                q.j2
            )));
        }
        let sign = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
        acc += sign / factorial_rat(k)
            * factorial_rat(j12m - k)
            * factorial_rat(tj2 - k)
            / (factorial_rat(kk - k)
                * factorial_rat(jsum1 - k)
                * factorial_rat(j2m2 - k))
            * &b_table[k as usize]
            / a_k;
    }
    Ok(acc)
}

/// Rational square of the numerator's prefactor bracket, without the
/// [xi(b)_K]!^-2 that distinguishes the simplified form.
fn numerator_bracket_base(q: &CgcQuery) -> Result<Rational> {
    let m = q.m();
    let two = |x: &Rational| x * x;
    let aj_jm = a_bracket(q.j, &q.beta2, ii(q.j + m))?;
    let aj_2j = a_bracket(q.j, &q.beta2, q.j.twice())?;
    let a1_2j1 = a_bracket(q.j1, &q.beta2, q.j1.twice())?;
    let a1_m1 = a_bracket(q.j1, &q.beta2, ii(q.j1 + q.m1))?;
    let a2_2j2 = a_bracket(q.j2, &q.beta2, q.j2.twice())?;
    let a2_m2 = a_bracket(q.j2, &q.beta2, ii(q.j2 + q.m2))?;
    let a2_ref = a_bracket(q.j2, &q.beta2, ii(q.j2 - q.j1 + m))?;
    Ok(two(&rat_int(q.j.twice() + 1))
        * two(&factorial_rat(ii(q.j + m)))
        * factorial_rat(q.j1.twice())
        * factorial_rat(ii(q.j2 - q.m2))
        * factorial_rat(ii(q.j1 + q.j2 - m))
        / (two(&factorial_rat(ii(q.j - m)))
            * factorial_rat(ii(q.j1 + q.m1))
            * factorial_rat(ii(q.j1 - q.m1))
            * factorial_rat(ii(q.j2 + q.m2))
            * factorial_rat(ii(q.j2 - q.j1 + m)))
        * two(&aj_jm)
        * a1_2j1
        / (two(&aj_2j) * a1_m1)
        * two(&a2_2j2)
        / (a2_m2 * a2_ref))
}

/// Numerator of the coefficient in its simplified single-sum form.
pub fn cgc_numerator(q: &CgcQuery) -> Result<QuadraticSurd> {
    let kk = q.k_depth();
    let b_kk = b_bracket(q.j, &q.beta2, kk)?;
    let bracket = numerator_bracket_base(q)? / (&b_kk * &b_kk);
    let s = s_sum(q)?;
    // squaring [xi(b)_K]! into the bracket discards its sign; restore it
    let mut sign = if kk % 2 == 0 { Rational::one() } else { -Rational::one() };
    if b_kk.is_negative() {
        sign = -sign;
    }
    Ok(Factored::from_rational(&bracket).sqrt_surd()?.scale(&(sign * s)))
}

/// Numerator in its unsimplified double-sum form (l + k = K), kept as a
/// cross-check of the single-sum reduction.
pub fn cgc_numerator_double_sum(q: &CgcQuery) -> Result<QuadraticSurd> {
    let kk = q.k_depth();
    let m = q.m();
    let bracket = numerator_bracket_base(q)?;
    let a_table = shifted_table(&a_pair_factor(q.j2, &q.beta2), q.j2.twice(), kk);
    let b = b_pair_factor(q.j, &q.beta2);
    let j_minus_m = ii(q.j - m);
    let mut sum = Rational::zero();
    let mut l_factorial = Rational::one();
    let mut b_factorial = Rational::one();
    let mut first_zero: Option<u32> = None;
    for l in 0..=kk {
        if l > 0 {
            l_factorial *= rat_int(l);
            if first_zero.is_none() {
                let v = b.eval_int(l);
                if v.is_zero() {
                    first_zero = Some(l as u32);
                } else {
                    b_factorial *= v;
                }
            }
        }
        let k = kk - l;
        if ii(q.j2 - q.m2) - k < 0 {
            continue;
        }
        if let Some(l0) = first_zero {
            return Err(Error::DegenerateParameter { l: l0 });
        }
        let a_k = &a_table[k as usize];
        if a_k.is_zero() {
            return Err(Error::DegenerateRepresentation(format!(
                "[xi(A)_{k}]! vanishes for j2 = {}",
                q.j2
            )));
        }
        let jml = factorial_rat(j_minus_m + l);
        let sign = if l % 2 == 0 { Rational::one() } else { -Rational::one() };
        sum += sign / &l_factorial * &jml * &jml
            / (factorial_rat(q.j.twice() + l + 1) * &b_factorial)
            / factorial_rat(k)
            * factorial_rat(q.j2.twice() - k)
            / (factorial_rat(ii(q.j1 + q.j2 - m) - k)
                * factorial_rat(ii(q.j2 - q.m2) - k))
            / a_k;
    }
    Ok(Factored::from_rational(&bracket).sqrt_surd()?.scale(&sum))
}

/// Terminating hypergeometric sum
/// sum_{k=0}^{K} (a1)_k (a2)_k [xi(P)_k]! / ((c1)_k [xi(Q)_k]! k!)
/// where the paired numerator and denominator parameters enter through their
/// quadratic factors, keeping every term rational.
pub fn hyper_4f3_terminating(
    a1: &Rational,
    a2: &Rational,
    num_pair: &QuadraticFactor,
    c1: &Rational,
    den_pair: &QuadraticFactor,
    terms: i64,
) -> Result<Rational> {
    let mut acc = Rational::zero();
    let mut term = Rational::one();
    for k in 0..=terms {
        if k > 0 {
            let r = k - 1;
            let den = den_pair.eval_int(k);
            if den.is_zero() {
                return Err(Error::DegenerateParameter { l: k as u32 });
            }
            term *= (a1 + rat_int(r)) * (a2 + rat_int(r)) * num_pair.eval_int(k)
                / ((c1 + rat_int(r)) * den * rat_int(k));
        }
        acc += &term;
    }
    Ok(acc)
}

/// Diagonal reference element of the projector, in either of its two
/// equivalent forms. Strictly positive for admissible queries.
pub fn cgc_denominator(q: &CgcQuery, form: DenominatorForm) -> Result<Rational> {
    let kk = q.k_depth();
    let m = q.m();
    let aj_jm = a_bracket(q.j, &q.beta2, ii(q.j + m))?;
    let aj_2j = a_bracket(q.j, &q.beta2, q.j.twice())?;
    let a2_2j2 = a_bracket(q.j2, &q.beta2, q.j2.twice())?;
    let a2_ref = a_bracket(q.j2, &q.beta2, ii(q.j2 - q.j1 + m))?;
    let b_kk = b_bracket(q.j, &q.beta2, kk)?;
    let common = rat_int(q.j.twice() + 1)
        * factorial_rat(ii(q.j + m))
        * factorial_rat(ii(q.j1 + q.j2 - m))
        / (factorial_rat(ii(q.j - m)) * factorial_rat(ii(q.j2 - q.j1 + m)))
        * &aj_jm
        * &a2_2j2
        / (&aj_2j * &a2_ref)
        / &b_kk;
    let den = match form {
        DenominatorForm::DirectSum => {
            let a_table = shifted_table(&a_pair_factor(q.j2, &q.beta2), q.j2.twice(), kk);
            let b_table = shifted_table(&b_pair_factor(q.j, &q.beta2), kk, kk);
            let j2j1j = ii(q.j2 - q.j1 + q.j);
            let mut sum = Rational::zero();
            for l in 0..=kk {
                let a_rem = &a_table[(kk - l) as usize];
                if a_rem.is_zero() {
                    return Err(Error::DegenerateRepresentation(format!(
                        "[xi(A)_{}]! vanishes for j2 = {}",
                        kk - l,
                        q.j2
                    )));
                }
                let sign = if l % 2 == 0 { Rational::one() } else { -Rational::one() };
                sum += sign / factorial_rat(l)
                    * factorial_rat(j2j1j + l)
                    / (factorial_rat(q.j.twice() + l + 1) * factorial_rat(kk - l))
                    * &b_table[(kk - l) as usize]
                    / a_rem;
            }
            common * sum
        }
        DenominatorForm::Hypergeometric => {
            let a_top = shifted_table(&a_pair_factor(q.j2, &q.beta2), q.j2.twice(), kk)
                [kk as usize]
                .clone();
            if a_top.is_zero() {
                return Err(Error::DegenerateRepresentation(format!(
                    "[xi(A)_{kk}]! vanishes for j2 = {}",
                    q.j2
                )));
            }
            let b_top =
                shifted_table(&b_pair_factor(q.j, &q.beta2), kk, kk)[kk as usize].clone();
            let a_tilde = a_pair_factor(q.j2, &q.beta2).shift_reflect(&rat_int(kk));
            let f = hyper_4f3_terminating(
                &rat_int(-kk),
                &(Rational::one() + (q.j - q.j1 + q.j2).to_rational()),
                &a_tilde,
                &rat_int(q.j.twice() + 2),
                &b_pair_factor(q.j, &q.beta2),
                kk,
            )?;
            common / factorial_rat(q.j.twice() + 1)
                * factorial_rat(ii(q.j2 - q.j1 + q.j))
                / factorial_rat(kk)
                * b_top
                / a_top
                * f
        }
    };
    if !den.is_positive() {
        return Err(Error::NullProjection(format!(
            "reference diagonal element {den} is not positive"
        )));
    }
    Ok(den)
}

/// The coefficient in fully closed form: sign (-1)^K sgn(S) and rational
/// square R S^2 / F, where F is the terminating hypergeometric sum.
pub fn cgc_closed_form(q: &CgcQuery) -> Result<CGValue> {
    let kk = q.k_depth();
    let m = q.m();
    let s = s_sum(q)?;
    if s.is_zero() {
        return Ok(CGValue::zero());
    }
    let a_table = shifted_table(&a_pair_factor(q.j2, &q.beta2), q.j2.twice(), kk);
    let a_top = &a_table[kk as usize];
    if a_top.is_zero() {
        return Err(Error::DegenerateRepresentation(format!(
            "[xi(A)_{kk}]! vanishes for j2 = {}",
            q.j2
        )));
    }
    let b_top = shifted_table(&b_pair_factor(q.j, &q.beta2), kk, kk)[kk as usize].clone();
    if b_top.is_zero() {
        return Err(Error::NullProjection(format!(
            "[xi(B)_{kk}]! vanishes: the reference element is null"
        )));
    }
    let b_kk = b_bracket(q.j, &q.beta2, kk)?;
    let r = rat_int(q.j.twice() + 1)
        * factorial_rat(q.j.twice() + 1)
        * factorial_rat(q.j1.twice())
        * factorial_rat(ii(q.j2 - q.m2))
        * factorial_rat(ii(q.j + m))
        * factorial_rat(kk)
        / (factorial_rat(ii(q.j1 + q.m1))
            * factorial_rat(ii(q.j1 - q.m1))
            * factorial_rat(ii(q.j2 + q.m2))
            * factorial_rat(ii(q.j - m))
            * factorial_rat(ii(q.j2 - q.j1 + q.j)))
        * a_bracket(q.j, &q.beta2, ii(q.j + m))?
        / a_bracket(q.j, &q.beta2, q.j.twice())?
        * a_bracket(q.j1, &q.beta2, q.j1.twice())?
        * a_bracket(q.j2, &q.beta2, q.j2.twice())?
        / (a_bracket(q.j1, &q.beta2, ii(q.j1 + q.m1))?
            * a_bracket(q.j2, &q.beta2, ii(q.j2 + q.m2))?)
        * a_top
        / &b_top
        / &b_kk;
    let a_tilde = a_pair_factor(q.j2, &q.beta2).shift_reflect(&rat_int(kk));
    let f = hyper_4f3_terminating(
        &rat_int(-kk),
        &(Rational::one() + (q.j - q.j1 + q.j2).to_rational()),
        &a_tilde,
        &rat_int(q.j.twice() + 2),
        &b_pair_factor(q.j, &q.beta2),
        kk,
    )?;
    if f.is_zero() {
        return Err(Error::NullProjection(
            "hypergeometric factor vanishes: the reference element is null".into(),
        ));
    }
    let square = r * &s * &s / f;
    if !square.is_positive() {
        return Err(Error::NullProjection(format!(
            "closed-form square {square} is not positive"
        )));
    }
    let mut sign = if s.is_negative() { -1 } else { 1 };
    if kk % 2 == 1 {
        sign = -sign;
    }
    if b_kk.is_negative() {
        sign = -sign;
    }
    CGValue::new(sign, square)
}

/// The coefficient as the ratio of closed-form matrix elements against the
/// reference state, independent of the single-sum simplifications.
pub fn cgc_via_projector_ratio(q: &CgcQuery) -> Result<CGValue> {
    let models = [
        IrrepModel::cubic(q.j1, q.beta2.clone())?,
        IrrepModel::cubic(q.j2, q.beta2.clone())?,
    ];
    let spec = ProjectorSpec::highest(q.j, q.m(), q.beta2.clone())?;
    let ref_ms = [q.j1, q.m() - q.j1];
    let den = matrix_element_m(&models, &spec, &ref_ms, &ref_ms)?;
    let den = den.as_rational().cloned().ok_or_else(|| {
        Error::InvalidInput("diagonal matrix element is not rational".into())
    })?;
    let num = matrix_element_m(&models, &spec, &ref_ms, &[q.m1, q.m2])?;
    CGValue::from_ratio(&num, &den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn hi(t: i64) -> HalfInt {
        HalfInt::from_twice(t)
    }

    fn query(
        tj1: i64,
        tj2: i64,
        tj: i64,
        tm1: i64,
        tm2: i64,
        beta2: Rational,
    ) -> CgcQuery {
        CgcQuery::new(hi(tj1), hi(tj2), hi(tj), hi(tm1), hi(tm2), beta2).unwrap()
    }

    #[test]
    fn f0_examples() {
        let m = IrrepModel::cubic(hi(1), rat(1, 10)).unwrap();
        assert_eq!(f0_factor(&m, hi(1), hi(1)).unwrap(), QuadraticSurd::one());
        let m = IrrepModel::cubic(hi(1), Rational::zero()).unwrap();
        assert_eq!(f0_factor(&m, hi(1), hi(-1)).unwrap(), QuadraticSurd::one());
        let m = IrrepModel::cubic(hi(2), Rational::zero()).unwrap();
        assert_eq!(
            f0_factor(&m, hi(0), hi(0)).unwrap().as_rational().unwrap(),
            &rat_int(2)
        );
    }

    #[test]
    fn pk_examples() {
        let m = IrrepModel::cubic(hi(1), rat(1, 10)).unwrap();
        assert_eq!(pk_factor(&m, hi(1), hi(1), 0).unwrap(), Rational::one());
        assert_eq!(pk_factor(&m, hi(-1), hi(-1), 1).unwrap(), rat(20, 21));
        let m = IrrepModel::cubic(hi(2), Rational::zero()).unwrap();
        assert_eq!(pk_factor(&m, hi(0), hi(0), 1).unwrap(), rat(1, 2));
        assert!(pk_factor(&m, hi(2), hi(0), 1).is_err());
    }

    #[test]
    fn matrix_element_examples() {
        let beta2 = rat(1, 10);
        let models = [
            IrrepModel::cubic(hi(1), beta2.clone()).unwrap(),
            IrrepModel::cubic(hi(1), beta2.clone()).unwrap(),
        ];
        let spec1 = ProjectorSpec::highest(hi(2), hi(0), beta2.clone()).unwrap();
        let e = matrix_element_m(&models, &spec1, &[hi(1), hi(-1)], &[hi(1), hi(-1)])
            .unwrap();
        assert_eq!(e.as_rational().unwrap(), &rat(7, 16));

        let spec0 = ProjectorSpec::highest(hi(0), hi(0), beta2).unwrap();
        let e = matrix_element_m(&models, &spec0, &[hi(1), hi(-1)], &[hi(-1), hi(1)])
            .unwrap();
        assert_eq!(e.as_rational().unwrap(), &rat(-7, 16));
        // weight mismatch
        let e = matrix_element_m(&models, &spec0, &[hi(1), hi(1)], &[hi(1), hi(1)])
            .unwrap();
        assert!(e.is_zero());
    }

    #[test]
    fn numerator_examples() {
        let q = query(1, 1, 0, -1, 1, rat(1, 10));
        let n = cgc_numerator(&q).unwrap();
        assert_eq!(n.as_rational().unwrap(), &rat(-7, 16));
        let n = cgc_numerator_double_sum(&q).unwrap();
        assert_eq!(n.as_rational().unwrap(), &rat(-7, 16));

        // stretched case
        let q = query(1, 2, 3, 1, 2, rat(1, 10));
        assert_eq!(cgc_numerator(&q).unwrap(), QuadraticSurd::one());

        let q = query(1, 1, 2, 1, -1, Rational::zero());
        assert_eq!(cgc_numerator(&q).unwrap().as_rational().unwrap(), &rat(1, 2));
    }

    #[test]
    fn denominator_examples() {
        let q = query(1, 1, 2, 1, -1, rat(1, 10));
        assert_eq!(cgc_denominator(&q, DenominatorForm::DirectSum).unwrap(), rat(7, 16));
        assert_eq!(
            cgc_denominator(&q, DenominatorForm::Hypergeometric).unwrap(),
            rat(7, 16)
        );
        let q = query(1, 1, 0, 1, -1, rat(1, 10));
        assert_eq!(cgc_denominator(&q, DenominatorForm::DirectSum).unwrap(), rat(9, 16));
        assert_eq!(
            cgc_denominator(&q, DenominatorForm::Hypergeometric).unwrap(),
            rat(9, 16)
        );
        let q = query(1, 1, 2, 1, -1, Rational::zero());
        assert_eq!(cgc_denominator(&q, DenominatorForm::DirectSum).unwrap(), rat(1, 2));
    }

    #[test]
    fn hyper_trivial() {
        let f = hyper_4f3_terminating(
            &rat_int(0),
            &rat_int(5),
            &QuadraticFactor::degenerate(),
            &rat_int(4),
            &QuadraticFactor::degenerate(),
            0,
        )
        .unwrap();
        assert_eq!(f, Rational::one());
    }

    #[test]
    fn closed_form_examples() {
        let q = query(1, 2, 3, 1, 2, rat(1, 10));
        let c = cgc_closed_form(&q).unwrap();
        assert_eq!((c.sign(), c.square().clone()), (1, Rational::one()));

        let q = query(1, 1, 2, 1, -1, Rational::zero());
        let c = cgc_closed_form(&q).unwrap();
        assert_eq!((c.sign(), c.square().clone()), (1, rat(1, 2)));

        let q = query(1, 1, 0, 1, -1, rat(1, 10));
        let c = cgc_closed_form(&q).unwrap();
        assert_eq!((c.sign(), c.square().clone()), (1, rat(9, 16)));
    }

    #[test]
    fn ratio_examples() {
        let q = query(1, 1, 0, -1, 1, rat(1, 10));
        let c = cgc_via_projector_ratio(&q).unwrap();
        assert_eq!((c.sign(), c.square().clone()), (-1, rat(49, 144)));

        let q = query(2, 1, 1, 2, -1, Rational::zero());
        let c = cgc_via_projector_ratio(&q).unwrap();
        assert_eq!((c.sign(), c.square().clone()), (1, rat(2, 3)));
    }
}
