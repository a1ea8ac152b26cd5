//! Representation kernel for polynomial deformations of su(2): structure
//! functions, psi/xi factors, ladder coefficients, Casimir eigenvalues, the
//! hermiticity bound, and the quadratic factors for all root pairs.
//!
//! The cubic (Higgs) mode fixes the structure function to
//! g(x) = x(x+1) + beta2 [x(x+1)]^2; closed projector and coupling formulas
//! exist only there. General odd-degree deformations are supported for
//! g/psi/xi/ladder evaluation only.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{
    rat_int, HalfInt, QuadraticFactor, QuadraticSurd, Rational,
};

/// Structure function g(x) = sum_r beta_r [x(x+1)]^r, r = 1..p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureFunction {
    betas: Vec<Rational>,
}

impl StructureFunction {
    pub fn new(betas: Vec<Rational>) -> Result<Self> {
        if betas.is_empty() {
            return Err(Error::InvalidInput("structure function needs p >= 1".into()));
        }
        Ok(StructureFunction { betas })
    }

    /// Cubic mode: beta1 = 1 and the given beta2. beta2 = 0 is the linear
    /// su(2) limit; no formula special-cases it.
    pub fn cubic(beta2: Rational) -> Self {
        StructureFunction { betas: vec![Rational::one(), beta2] }
    }

    pub fn linear() -> Self {
        Self::cubic(Rational::zero())
    }

    pub fn degree_p(&self) -> usize {
        self.betas.len()
    }

    pub fn betas(&self) -> &[Rational] {
        &self.betas
    }

    pub fn is_cubic(&self) -> bool {
        self.betas.len() == 2 && self.betas[0].is_one()
    }

    /// beta2 in cubic mode.
    pub fn beta2(&self) -> Result<&Rational> {
        if self.is_cubic() {
            Ok(&self.betas[1])
        } else {
            Err(Error::InvalidInput(
                "operation requires the cubic deformation (p = 2, beta1 = 1)".into(),
            ))
        }
    }

    /// g evaluated at a rational argument.
    pub fn g_value(&self, x: &Rational) -> Rational {
        let t = x * (x + Rational::one());
        let mut acc = Rational::zero();
        for beta in self.betas.iter().rev() {
            acc = (acc + beta) * &t;
        }
        acc
    }

    /// P(x) = g(x) - g(x-1), the commutator polynomial.
    pub fn p_value(&self, x: &Rational) -> Rational {
        self.g_value(x) - self.g_value(&(x - Rational::one()))
    }
}

/// Ladder direction for step-operator matrix elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Up,
    Down,
}

/// A finite-dimensional irreducible representation: spin label and structure
/// function. Dimension 2j + 1, Fock index n in 0..=2j, weight m = -j + n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrrepModel {
    j: HalfInt,
    sf: StructureFunction,
}

impl IrrepModel {
    pub fn new(j: HalfInt, sf: StructureFunction) -> Result<Self> {
        if j.is_negative() {
            return Err(Error::InvalidInput(format!("spin j = {j} must be nonnegative")));
        }
        Ok(IrrepModel { j, sf })
    }

    pub fn cubic(j: HalfInt, beta2: Rational) -> Result<Self> {
        Self::new(j, StructureFunction::cubic(beta2))
    }

    pub fn j(&self) -> HalfInt {
        self.j
    }

    pub fn sf(&self) -> &StructureFunction {
        &self.sf
    }

    pub fn beta2(&self) -> Result<&Rational> {
        self.sf.beta2()
    }

    pub fn two_j(&self) -> i64 {
        self.j.twice()
    }

    pub fn dim(&self) -> usize {
        (self.j.twice() + 1) as usize
    }

    pub fn weight_of(&self, n: usize) -> HalfInt {
        HalfInt::from_twice(-self.j.twice() + 2 * n as i64)
    }

    /// Fock index of weight m, when m is a weight of this irrep.
    pub fn index_of_weight(&self, m: HalfInt) -> Option<usize> {
        let t = m.twice() + self.j.twice();
        if t >= 0 && t % 2 == 0 && t / 2 <= self.j.twice() {
            Some((t / 2) as usize)
        } else {
            None
        }
    }

    /// Squared ladder matrix element psi_n = g(j) - g(-j + n - 1),
    /// defined for 0 <= n <= 2j + 1 with psi_0 = psi_{2j+1} = 0.
    pub fn psi(&self, n: i64) -> Result<Rational> {
        if n < 0 || n > self.two_j() + 1 {
            return Err(Error::InvalidInput(format!(
                "psi index n = {n} outside 0..={} for j = {}",
                self.two_j() + 1,
                self.j
            )));
        }
        let jr = self.j.to_rational();
        let arg = -&jr + rat_int(n - 1);
        Ok(self.sf.g_value(&jr) - self.sf.g_value(&arg))
    }

    /// Deformation factor xi_n. In cubic mode this is the closed quadratic
    /// 1 + beta2 [n^2 - (2j+1) n + 2j(j+1)], valid for any integer n; for a
    /// general deformation it is psi_n / (n (2j+1-n)), defined on 1..=2j.
    pub fn xi(&self, n: i64) -> Result<Rational> {
        if self.sf.is_cubic() {
            let beta2 = &self.sf.betas()[1];
            let jr = self.j.to_rational();
            let two_j_plus_1 = rat_int(self.two_j() + 1);
            let nr = rat_int(n);
            let bracket =
                &nr * &nr - two_j_plus_1 * &nr + rat_int(2) * &jr * (&jr + Rational::one());
            Ok(Rational::one() + beta2 * bracket)
        } else {
            if n < 1 || n > self.two_j() {
                return Err(Error::InvalidInput(format!(
                    "xi index n = {n} outside 1..={} for a general deformation",
                    self.two_j()
                )));
            }
            let denom = rat_int(n) * rat_int(self.two_j() + 1 - n);
            Ok(self.psi(n)? / denom)
        }
    }

    /// Step-operator coefficient: up is sqrt(psi_{n+1}) (zero at the top),
    /// down is sqrt(psi_n) (zero at the bottom).
    pub fn ladder_coeff(&self, n: i64, direction: Direction) -> Result<QuadraticSurd> {
        if n < 0 || n > self.two_j() {
            return Err(Error::InvalidInput(format!(
                "state index n = {n} outside 0..={} for j = {}",
                self.two_j(),
                self.j
            )));
        }
        let psi = match direction {
            Direction::Up => self.psi(n + 1)?,
            Direction::Down => self.psi(n)?,
        };
        QuadraticSurd::sqrt_rational(&psi)
    }

    /// Casimir eigenvalue g(j).
    pub fn casimir_eigenvalue(&self) -> Rational {
        self.sf.g_value(&self.j.to_rational())
    }

    /// Norm of the n-fold raised ground state: sqrt([psi_n]!), equal to the
    /// product of the upward ladder coefficients along the chain.
    pub fn state_norm_factor(&self, n: i64) -> Result<QuadraticSurd> {
        if n < 0 || n > self.two_j() {
            return Err(Error::InvalidInput(format!(
                "state index n = {n} outside 0..={} for j = {}",
                self.two_j(),
                self.j
            )));
        }
        let mut acc = QuadraticSurd::one();
        for k in 1..=n {
            acc = acc.mul(&QuadraticSurd::sqrt_rational(&self.psi(k)?)?);
        }
        Ok(acc)
    }
}

/// Outcome of the hermiticity bound beta2 >= -1/(2 j^2).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HermiticityVerdict {
    /// Strictly inside the bound: all psi_n > 0.
    Ok,
    /// Exactly on the bound: some psi_n vanishes and the representation
    /// degenerates (accepted with a warning by constructors).
    Boundary,
    /// Below the bound: some psi_n < 0; step operators cannot be hermitian.
    Violated,
}

/// Checks the closed-form hermiticity bound for the cubic deformation.
/// j = 0 is unconstrained. The psi-positivity cross-check lives in the
/// verification suites.
pub fn hermiticity_check(j: HalfInt, beta2: &Rational) -> HermiticityVerdict {
    if j.twice() <= 0 {
        return HermiticityVerdict::Ok;
    }
    let jr = j.to_rational();
    let bound = -Rational::one() / (rat_int(2) * &jr * &jr);
    if *beta2 > bound {
        HermiticityVerdict::Ok
    } else if *beta2 == bound {
        HermiticityVerdict::Boundary
    } else {
        HermiticityVerdict::Violated
    }
}

/// Minimum of psi_n over 1..=2j for the cubic deformation; `None` for j = 0.
/// Independent route for cross-checking `hermiticity_check`.
pub fn min_psi(j: HalfInt, beta2: &Rational) -> Option<Rational> {
    if j.twice() <= 0 {
        return None;
    }
    let model = IrrepModel::cubic(j, beta2.clone()).ok()?;
    (1..=j.twice())
        .map(|n| model.psi(n).expect("n in range"))
        .min()
}

/// Root pairs of the cubic deformation factor and their shifts. Every factor
/// is tied to an explicit spin: the same symbol names different roots for
/// different spins.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootPairKind {
    /// Roots a+/a- of xi_n = 0: sum 2j+1, product 2j(j+1) + 1/beta2.
    APair,
    /// Roots b+/b-: sum -(2j+1), same product.
    BPair,
    /// The pair 1 - r +/- + shift built on another pair.
    Shifted { base: Box<RootPairKind>, shift: Rational },
}

/// Quadratic factor k -> beta2 (k - r1)(k - r2) for the requested root pair.
/// beta2 = 0 yields the degenerate factor (0, 0, 1): the linear limit makes
/// every generalized factorial equal to one with no special cases.
pub fn quadratic_factor_for(kind: &RootPairKind, j: HalfInt, beta2: &Rational) -> QuadraticFactor {
    match kind {
        RootPairKind::APair | RootPairKind::BPair => {
            if beta2.is_zero() {
                return QuadraticFactor::degenerate();
            }
            let jr = j.to_rational();
            let two_j_plus_1 = rat_int(j.twice() + 1);
            // gamma = beta2 * (2j(j+1) + 1/beta2) = 2 beta2 j(j+1) + 1
            let gamma = rat_int(2) * beta2 * &jr * (&jr + Rational::one()) + Rational::one();
            let beta = match kind {
                RootPairKind::APair => -(beta2 * &two_j_plus_1),
                _ => beta2 * &two_j_plus_1,
            };
            QuadraticFactor::new(beta2.clone(), beta, gamma)
        }
        RootPairKind::Shifted { base, shift } => {
            quadratic_factor_for(base, j, beta2).shift_reflect(shift)
        }
    }
}

/// Factor for the a-pair of spin j.
pub fn a_pair_factor(j: HalfInt, beta2: &Rational) -> QuadraticFactor {
    quadratic_factor_for(&RootPairKind::APair, j, beta2)
}

/// Factor for the b-pair of spin j.
pub fn b_pair_factor(j: HalfInt, beta2: &Rational) -> QuadraticFactor {
    quadratic_factor_for(&RootPairKind::BPair, j, beta2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::exactnum::gen_factorial;

    fn cubic(j_twice: i64, beta2: Rational) -> IrrepModel {
        IrrepModel::cubic(HalfInt::from_twice(j_twice), beta2).unwrap()
    }

    #[test]
    fn g_values() {
        let sf = StructureFunction::cubic(rat(1, 10));
        assert_eq!(sf.g_value(&rat_int(1)), rat(12, 5));
        assert_eq!(sf.g_value(&rat_int(0)), rat_int(0));
        assert_eq!(sf.g_value(&rat_int(-1)), rat_int(0));
    }

    #[test]
    fn p_values() {
        let sf = StructureFunction::cubic(rat(1, 10));
        assert_eq!(sf.p_value(&rat_int(1)), rat(12, 5));
        let linear = StructureFunction::linear();
        assert_eq!(linear.p_value(&rat(7, 2)), rat_int(7));
        let sf1 = StructureFunction::cubic(rat_int(1));
        assert_eq!(sf1.p_value(&rat(1, 2)), rat(3, 2));
        // P(x) = 2x + 4 beta2 x^3 in cubic mode
        for tx in -6..=6 {
            let x = rat(tx, 2);
            let expect = rat_int(2) * &x + rat(4, 10) * &x * &x * &x;
            assert_eq!(sf.p_value(&x), expect);
        }
    }

    #[test]
    fn psi_values() {
        assert_eq!(cubic(1, rat(1, 10)).psi(1).unwrap(), rat(21, 20));
        assert_eq!(cubic(2, Rational::zero()).psi(1).unwrap(), rat_int(2));
        assert_eq!(cubic(2, rat(1, 10)).psi(2).unwrap(), rat(12, 5));
        // endpoints vanish
        let m = cubic(3, rat(1, 10));
        assert_eq!(m.psi(0).unwrap(), Rational::zero());
        assert_eq!(m.psi(4).unwrap(), Rational::zero());
        assert!(m.psi(5).is_err());
        assert!(m.psi(-1).is_err());
    }

    #[test]
    fn xi_values_and_symmetry() {
        let m = cubic(2, rat(1, 10));
        assert_eq!(m.xi(1).unwrap(), rat(6, 5));
        assert_eq!(m.xi(2).unwrap(), rat(6, 5));
        assert_eq!(cubic(2, Rational::zero()).xi(7).unwrap(), Rational::one());
        // psi_n = n (2j+1-n) xi_n
        for tj in 1..=8 {
            let m = cubic(tj, rat(1, 10));
            for n in 1..=tj {
                let expect = rat_int(n) * rat_int(tj + 1 - n) * m.xi(n).unwrap();
                assert_eq!(m.psi(n).unwrap(), expect);
            }
        }
    }

    #[test]
    fn hermiticity_examples() {
        let j1 = HalfInt::from_int(1);
        assert_eq!(hermiticity_check(j1, &rat(-2, 5)), HermiticityVerdict::Ok);
        assert_eq!(hermiticity_check(j1, &rat(-1, 2)), HermiticityVerdict::Boundary);
        assert_eq!(hermiticity_check(j1, &rat(-3, 5)), HermiticityVerdict::Violated);
        // boundary makes xi_1 (hence psi_1) vanish
        assert_eq!(cubic(2, rat(-1, 2)).psi(1).unwrap(), Rational::zero());
        assert_eq!(min_psi(j1, &rat(-3, 5)).unwrap(), rat(-2, 5));
    }

    #[test]
    fn ladder_examples() {
        let m = cubic(1, rat(1, 10));
        let up = m.ladder_coeff(0, Direction::Up).unwrap();
        assert_eq!(up.square(), rat(21, 20));
        assert!(m.ladder_coeff(0, Direction::Down).unwrap().is_zero());
        assert!(m.ladder_coeff(1, Direction::Up).unwrap().is_zero());
        let lin = cubic(2, Rational::zero());
        assert_eq!(
            lin.ladder_coeff(1, Direction::Up).unwrap().square(),
            rat_int(2)
        );
        assert!(m.ladder_coeff(2, Direction::Up).is_err());
    }

    #[test]
    fn quadratic_factors() {
        let j1 = HalfInt::from_int(1);
        let a = a_pair_factor(j1, &rat(1, 10));
        assert_eq!(a, QuadraticFactor::new(rat(1, 10), rat(-3, 10), rat(7, 5)));
        let b = b_pair_factor(j1, &rat(1, 10));
        assert_eq!(b, QuadraticFactor::new(rat(1, 10), rat(3, 10), rat(7, 5)));
        assert_eq!(
            a_pair_factor(j1, &Rational::zero()),
            QuadraticFactor::degenerate()
        );
        // A-pair factor value at k equals xi_k of the same irrep
        let m = cubic(2, rat(1, 10));
        assert_eq!(a.eval_int(1), m.xi(1).unwrap());
        // b-pair example from the projector recurrence
        assert_eq!(gen_factorial(&b, 1), rat(9, 5));
        // a-pair gen-factorial example
        assert_eq!(gen_factorial(&a, 2), rat(36, 25));
    }

    #[test]
    fn shifted_pair_is_a_pair_for_full_shift() {
        // shifting the a-pair of spin j by 2j reproduces the a-pair factor
        for tj in 1..=6 {
            let j = HalfInt::from_twice(tj);
            for beta2 in [rat(1, 10), rat_int(1), rat(-1, 20), Rational::zero()] {
                let a = a_pair_factor(j, &beta2);
                let shifted = a.shift_reflect(&rat(tj, 1));
                assert_eq!(a, shifted);
            }
        }
    }

    #[test]
    fn casimir_and_norms() {
        assert_eq!(cubic(2, rat(1, 10)).casimir_eigenvalue(), rat(12, 5));
        assert_eq!(cubic(1, Rational::zero()).casimir_eigenvalue(), rat(3, 4));
        assert_eq!(cubic(0, rat(1, 10)).casimir_eigenvalue(), Rational::zero());

        let m = cubic(1, rat(1, 10));
        assert_eq!(m.state_norm_factor(0).unwrap(), QuadraticSurd::one());
        assert_eq!(m.state_norm_factor(1).unwrap().square(), rat(21, 20));
        let lin = cubic(2, Rational::zero());
        assert_eq!(
            lin.state_norm_factor(2).unwrap().as_rational(),
            Some(&rat_int(2))
        );
    }

    #[test]
    fn general_mode_restrictions() {
        // quintic deformation: only evaluation, with the general xi range
        let sf = StructureFunction::new(vec![rat_int(1), rat(1, 10), rat(1, 100)]).unwrap();
        let m = IrrepModel::new(HalfInt::from_int(1), sf).unwrap();
        assert!(m.beta2().is_err());
        assert!(m.xi(0).is_err());
        let xi1 = m.xi(1).unwrap();
        assert_eq!(m.psi(1).unwrap(), rat_int(2) * xi1);
    }
}
