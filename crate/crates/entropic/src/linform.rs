//! Linear forms over the joint-entropy coordinates.
//!
//! A `LinForm` is an exact linear combination `∑ c_α h_α` where `α` runs over
//! the nonempty subsets of `{1, .., n}` and the coefficients are rationals.
//! It is the universal carrier for inequalities (`f ≥ 0`), constraints
//! (`f = 0`), and objectives. Shannon's information measures expand into
//! linear forms:
//!
//! - `H(X_α | X_γ) = h_{α∪γ} − h_γ`
//! - `I(X_α; X_β | X_γ) = h_{α∪γ} + h_{β∪γ} − h_{α∪β∪γ} − h_γ`
//!
//! with the `h_γ` term dropped when `γ` is empty (`h_∅ = 0` by convention and
//! never stored).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::CoreError;
use crate::rational::{to_f64, Rat};
use crate::varset::{VarSet, MAX_VARS};

/// Exact linear form over the `2^n − 1` entropy coordinates.
///
/// Zero coefficients are never stored, keys are nonempty, and the map is
/// ordered by the canonical (ascending bitmask) subset order, so equality is
/// coefficient-wise and iteration order is deterministic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinForm {
    n: u8,
    coeffs: BTreeMap<VarSet, Rat>,
}

impl LinForm {
    /// The zero form: the value of `H(X_∅)` and the additive identity.
    pub fn zero(n: u8) -> LinForm {
        debug_assert!(n <= MAX_VARS);
        LinForm {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    /// `+1·h_α`, the joint entropy `H(X_α)`.
    pub fn entropy(n: u8, alpha: VarSet) -> Result<LinForm, CoreError> {
        Self::check_set(n, alpha)?;
        if alpha.is_empty() {
            return Err(CoreError::EmptySet);
        }
        let mut f = LinForm::zero(n);
        f.coeffs.insert(alpha, Rat::one());
        Ok(f)
    }

    /// `H(X_α | X_γ) = h_{α∪γ} − h_γ`.
    pub fn cond_entropy(n: u8, alpha: VarSet, gamma: VarSet) -> Result<LinForm, CoreError> {
        Self::check_set(n, alpha)?;
        Self::check_set(n, gamma)?;
        if alpha.is_empty() {
            return Err(CoreError::EmptySet);
        }
        if !alpha.is_disjoint(gamma) {
            return Err(CoreError::DisjointnessViolated);
        }
        let mut f = LinForm::zero(n);
        f.add_coeff(alpha.union(gamma), Rat::one());
        if !gamma.is_empty() {
            f.add_coeff(gamma, -Rat::one());
        }
        Ok(f)
    }

    /// `I(X_α; X_β | X_γ) = h_{α∪γ} + h_{β∪γ} − h_{α∪β∪γ} − h_γ`.
    pub fn mutual(n: u8, alpha: VarSet, beta: VarSet, gamma: VarSet) -> Result<LinForm, CoreError> {
        Self::check_set(n, alpha)?;
        Self::check_set(n, beta)?;
        Self::check_set(n, gamma)?;
        if alpha.is_empty() || beta.is_empty() {
            return Err(CoreError::EmptySet);
        }
        if !alpha.is_disjoint(beta) || !alpha.is_disjoint(gamma) || !beta.is_disjoint(gamma) {
            return Err(CoreError::DisjointnessViolated);
        }
        let mut f = LinForm::zero(n);
        f.add_coeff(alpha.union(gamma), Rat::one());
        f.add_coeff(beta.union(gamma), Rat::one());
        f.add_coeff(alpha.union(beta).union(gamma), -Rat::one());
        if !gamma.is_empty() {
            f.add_coeff(gamma, -Rat::one());
        }
        Ok(f)
    }

    /// Exact linear combination `∑ cᵢ·fᵢ`; zeros are dropped.
    pub fn combine<'a, I>(terms: I) -> Result<LinForm, CoreError>
    where
        I: IntoIterator<Item = (Rat, &'a LinForm)>,
    {
        let mut acc: Option<LinForm> = None;
        for (c, f) in terms {
            match &mut acc {
                None => {
                    let mut g = LinForm::zero(f.n);
                    g.accumulate(&c, f);
                    acc = Some(g);
                }
                Some(g) => {
                    if g.n != f.n {
                        return Err(CoreError::ContextMismatch(g.n, f.n));
                    }
                    g.accumulate(&c, f);
                }
            }
        }
        acc.ok_or(CoreError::EmptySet)
    }

    /// Build directly from `(subset, coefficient)` pairs; repeated subsets
    /// accumulate, zeros are dropped.
    pub fn from_terms<I>(n: u8, terms: I) -> Result<LinForm, CoreError>
    where
        I: IntoIterator<Item = (VarSet, Rat)>,
    {
        let mut f = LinForm::zero(n);
        for (s, c) in terms {
            Self::check_set(n, s)?;
            if s.is_empty() {
                return Err(CoreError::EmptySet);
            }
            f.add_coeff(s, c);
        }
        Ok(f)
    }

    /// `c·f`.
    pub fn scaled(&self, c: &Rat) -> LinForm {
        if c.is_zero() {
            return LinForm::zero(self.n);
        }
        let mut f = LinForm::zero(self.n);
        for (s, v) in &self.coeffs {
            f.coeffs.insert(*s, c * v);
        }
        f
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `h_α` (zero when absent).
    pub fn coeff(&self, alpha: VarSet) -> Rat {
        self.coeffs.get(&alpha).cloned().unwrap_or_else(Rat::zero)
    }

    /// Terms in canonical subset order.
    pub fn terms(&self) -> impl Iterator<Item = (VarSet, &Rat)> {
        self.coeffs.iter().map(|(s, c)| (*s, c))
    }

    /// `∑ c_α h_α` against a dense coordinate vector in canonical order.
    /// Coefficients are converted exactly to `f64` and multiplied in floating
    /// point.
    pub fn evaluate(&self, h: &[f64]) -> Result<f64, CoreError> {
        let expected = (1usize << self.n) - 1;
        if h.len() != expected {
            return Err(CoreError::DimensionMismatch {
                expected,
                got: h.len(),
            });
        }
        let mut acc = 0.0;
        for (s, c) in &self.coeffs {
            acc += to_f64(c) * h[s.coord_index().expect("nonempty key")];
        }
        Ok(acc)
    }

    /// Exact evaluation against a rational coordinate vector.
    pub fn evaluate_exact(&self, h: &[Rat]) -> Result<Rat, CoreError> {
        let expected = (1usize << self.n) - 1;
        if h.len() != expected {
            return Err(CoreError::DimensionMismatch {
                expected,
                got: h.len(),
            });
        }
        let mut acc = Rat::zero();
        for (s, c) in &self.coeffs {
            acc += c * &h[s.coord_index().expect("nonempty key")];
        }
        Ok(acc)
    }

    /// Dense coefficient vector in canonical order, length `2^n − 1`.
    pub fn dense(&self) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); (1usize << self.n) - 1];
        for (s, c) in &self.coeffs {
            v[s.coord_index().expect("nonempty key")] = c.clone();
        }
        v
    }

    /// A balanced form has, for every variable `i`, coefficients summing to
    /// zero over the subsets containing `i`. Balance is the validity
    /// criterion for carrying an inequality over to differential entropy.
    pub fn is_balanced(&self) -> bool {
        for i in 1..=self.n {
            let mut sum = Rat::zero();
            for (s, c) in &self.coeffs {
                if s.contains(i) {
                    sum += c;
                }
            }
            if !sum.is_zero() {
                return false;
            }
        }
        true
    }

    /// Reinterpret over a larger variable count (coordinates keep meaning).
    pub fn widened(&self, n: u8) -> Result<LinForm, CoreError> {
        if n < self.n {
            return Err(CoreError::ContextMismatch(self.n, n));
        }
        let mut f = LinForm::zero(n);
        f.coeffs = self.coeffs.clone();
        Ok(f)
    }

    fn check_set(n: u8, s: VarSet) -> Result<(), CoreError> {
        let max = s.max_index();
        if max > n {
            return Err(CoreError::VariableBeyondContext { index: max, n });
        }
        Ok(())
    }

    fn add_coeff(&mut self, s: VarSet, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(s).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&s);
        }
    }

    fn accumulate(&mut self, c: &Rat, f: &LinForm) {
        if c.is_zero() {
            return;
        }
        for (s, v) in &f.coeffs {
            self.add_coeff(*s, c * v);
        }
    }
}

impl Add for &LinForm {
    type Output = LinForm;
    fn add(self, rhs: &LinForm) -> LinForm {
        assert_eq!(self.n, rhs.n, "context mismatch in LinForm addition");
        let mut f = self.clone();
        f.accumulate(&Rat::one(), rhs);
        f
    }
}

impl Sub for &LinForm {
    type Output = LinForm;
    fn sub(self, rhs: &LinForm) -> LinForm {
        assert_eq!(self.n, rhs.n, "context mismatch in LinForm subtraction");
        let mut f = self.clone();
        f.accumulate(&-Rat::one(), rhs);
        f
    }
}

impl Neg for &LinForm {
    type Output = LinForm;
    fn neg(self) -> LinForm {
        self.scaled(&-Rat::one())
    }
}

/// Canonical rendering: signed rational coefficients against `h`-labeled
/// coordinates in canonical subset order, e.g. `+1 h1 +1 h2 -1 h12`. The zero
/// form renders as `0`. `parse` of this text lowers back to the same form.
impl fmt::Display for LinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (s, c) in &self.coeffs {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let sign = if c.is_negative() { '-' } else { '+' };
            write!(f, "{}{} h{}", sign, c.abs(), s.label())?;
        }
        Ok(())
    }
}

impl fmt::Debug for LinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinForm[n={}]({})", self.n, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, rat};

    fn vs(indices: &[u8]) -> VarSet {
        VarSet::from_indices(indices).unwrap()
    }

    #[test]
    fn entropy_is_a_basis_vector() {
        let f = LinForm::entropy(3, vs(&[1])).unwrap();
        assert_eq!(f.to_string(), "+1 h1");
        let f = LinForm::entropy(3, vs(&[1, 2, 3])).unwrap();
        assert_eq!(f.to_string(), "+1 h123");
        assert_eq!(LinForm::entropy(2, VarSet::EMPTY), Err(CoreError::EmptySet));
    }

    #[test]
    fn cond_entropy_expansion() {
        let f = LinForm::cond_entropy(2, vs(&[1]), vs(&[2])).unwrap();
        assert_eq!(f.to_string(), "-1 h2 +1 h12");
        let f = LinForm::cond_entropy(2, vs(&[1]), VarSet::EMPTY).unwrap();
        assert_eq!(f.to_string(), "+1 h1");
        assert_eq!(
            LinForm::cond_entropy(2, vs(&[1]), vs(&[1])),
            Err(CoreError::DisjointnessViolated)
        );
    }

    #[test]
    fn mutual_information_expansion() {
        let f = LinForm::mutual(2, vs(&[1]), vs(&[2]), VarSet::EMPTY).unwrap();
        assert_eq!(f.to_string(), "+1 h1 +1 h2 -1 h12");
        let f = LinForm::mutual(3, vs(&[1]), vs(&[2]), vs(&[3])).unwrap();
        assert_eq!(f.to_string(), "-1 h3 +1 h13 +1 h23 -1 h123");
        // group argument on the left
        let f = LinForm::mutual(4, vs(&[1, 2]), vs(&[4]), vs(&[3])).unwrap();
        assert_eq!(f.to_string(), "-1 h3 +1 h123 +1 h34 -1 h1234");
    }

    #[test]
    fn combine_cancels_and_scales() {
        let h1 = LinForm::entropy(2, vs(&[1])).unwrap();
        let zero = LinForm::combine([(rat(1), &h1), (rat(-1), &h1)]).unwrap();
        assert!(zero.is_zero());
        assert_eq!(zero.to_string(), "0");

        let half = LinForm::combine([(frac(1, 2), &h1)]).unwrap();
        assert_eq!(half.to_string(), "+1/2 h1");

        let h2 = LinForm::entropy(3, vs(&[2])).unwrap();
        assert!(matches!(
            LinForm::combine([(rat(1), &h1), (rat(1), &h2)]),
            Err(CoreError::ContextMismatch(2, 3))
        ));
    }

    #[test]
    fn evaluation_on_entropy_vectors() {
        let f = LinForm::mutual(2, vs(&[1]), vs(&[2]), VarSet::EMPTY).unwrap();
        // independent fair bits
        assert_eq!(f.evaluate(&[1.0, 1.0, 2.0]).unwrap(), 0.0);
        // one bit copied
        assert_eq!(f.evaluate(&[1.0, 1.0, 1.0]).unwrap(), 1.0);
        assert_eq!(LinForm::zero(2).evaluate(&[1.0, 1.0, 2.0]).unwrap(), 0.0);
        assert!(f.evaluate(&[1.0]).is_err());
    }

    #[test]
    fn balance_detection() {
        let mi = LinForm::mutual(2, vs(&[1]), vs(&[2]), VarSet::EMPTY).unwrap();
        assert!(mi.is_balanced());
        let ce = LinForm::cond_entropy(2, vs(&[1]), vs(&[2])).unwrap();
        assert!(!ce.is_balanced());
        assert!(LinForm::zero(4).is_balanced());
    }

    #[test]
    fn zy98_combination_has_eleven_terms() {
        let n = 4;
        let i12 = LinForm::mutual(n, vs(&[1]), vs(&[2]), VarSet::EMPTY).unwrap();
        let i1_34 = LinForm::mutual(n, vs(&[1]), vs(&[3, 4]), VarSet::EMPTY).unwrap();
        let i34 = LinForm::mutual(n, vs(&[3]), vs(&[4]), VarSet::EMPTY).unwrap();
        let i34_1 = LinForm::mutual(n, vs(&[3]), vs(&[4]), vs(&[1])).unwrap();
        let i34_2 = LinForm::mutual(n, vs(&[3]), vs(&[4]), vs(&[2])).unwrap();
        let f = LinForm::combine([
            (rat(-2), &i34),
            (rat(1), &i12),
            (rat(1), &i1_34),
            (rat(3), &i34_1),
            (rat(1), &i34_2),
        ])
        .unwrap();
        assert_eq!(f.term_count(), 11);
        assert_eq!(
            f.to_string(),
            "-1 h1 -1 h12 -2 h3 +3 h13 +1 h23 -2 h4 +3 h14 +1 h24 +3 h34 -4 h134 -1 h234"
        );
        assert!(f.is_balanced());
    }

    #[test]
    fn expansion_identity_mutual_vs_cond_entropies() {
        // I(α;β|γ) = H(α|γ) − H(α|β∪γ), checked coefficient-wise for all
        // disjoint triples with n ≤ 4.
        for n in 2..=4u8 {
            for alpha in VarSet::all_nonempty(n) {
                for beta in VarSet::all_nonempty(n) {
                    if !alpha.is_disjoint(beta) {
                        continue;
                    }
                    let rest = VarSet::full(n).minus(alpha).minus(beta);
                    for gamma_mask in 0..=rest.mask() {
                        let gamma = VarSet::from_mask(gamma_mask & rest.mask()).unwrap();
                        if gamma.mask() != (gamma_mask & rest.mask()) {
                            continue;
                        }
                        let lhs = LinForm::mutual(n, alpha, beta, gamma).unwrap();
                        let a = LinForm::cond_entropy(n, alpha, gamma).unwrap();
                        let b = LinForm::cond_entropy(n, alpha, beta.union(gamma)).unwrap();
                        assert_eq!(lhs, &a - &b, "n={n} α={alpha} β={beta} γ={gamma}");
                    }
                }
            }
        }
    }
}
