//! Joint probability mass functions and their entropy vectors.
//!
//! A `JointPMF` over `n` discrete variables with alphabet sizes `k_1..k_n`
//! stores one probability per atom of the product space in row-major order
//! (the first variable varies slowest). Its entropy vector collects
//! `H(X_α) = −∑ q log₂ q` over every nonempty `α`, each term summed over the
//! support of the marginal (`0·log 0 = 0`). Entropies are in bits.
//!
//! Sums use compensated (Kahan) accumulation so that re-evaluating a search
//! candidate is as precise as `f64` allows.

use std::io::{BufRead, Write};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::varset::{VarSet, MAX_VARS};

/// Tolerance on `∑ p = 1` at construction.
pub const PMF_SUM_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("a joint pmf needs between 1 and {MAX_VARS} variables, got {0}")]
    BadVariableCount(usize),

    #[error("alphabet sizes must be at least 1")]
    BadAlphabet,

    #[error("probability table has {got} entries, expected {expected}")]
    BadTableSize { expected: usize, got: usize },

    #[error("probabilities must be nonnegative (entry {index} is {value})")]
    NegativeProbability { index: usize, value: f64 },

    #[error("probabilities sum to {0}, not 1")]
    NotNormalized(f64),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("malformed file: {0}")]
    Malformed(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Finite joint distribution over `n` discrete variables.
#[derive(Debug, Clone, PartialEq)]
pub struct JointPMF {
    alphabets: Vec<usize>,
    probs: Vec<f64>,
}

impl JointPMF {
    pub fn new(alphabets: Vec<usize>, probs: Vec<f64>) -> Result<JointPMF, ModelError> {
        if alphabets.is_empty() || alphabets.len() > MAX_VARS as usize {
            return Err(ModelError::BadVariableCount(alphabets.len()));
        }
        if alphabets.contains(&0) {
            return Err(ModelError::BadAlphabet);
        }
        let size: usize = alphabets.iter().product();
        if probs.len() != size {
            return Err(ModelError::BadTableSize {
                expected: size,
                got: probs.len(),
            });
        }
        for (index, &value) in probs.iter().enumerate() {
            if value < 0.0 || !value.is_finite() {
                return Err(ModelError::NegativeProbability { index, value });
            }
        }
        let sum = kahan_sum(probs.iter().copied());
        if (sum - 1.0).abs() > PMF_SUM_TOLERANCE {
            return Err(ModelError::NotNormalized(sum));
        }
        Ok(JointPMF { alphabets, probs })
    }

    pub fn n(&self) -> u8 {
        self.alphabets.len() as u8
    }

    pub fn alphabets(&self) -> &[usize] {
        &self.alphabets
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    /// Entropy of every nonempty subset of variables, in bits.
    pub fn entropy_vector(&self) -> EntropyVectorReal {
        let n = self.n();
        let mut vals = Vec::with_capacity((1usize << n) - 1);
        for alpha in VarSet::all_nonempty(n) {
            vals.push(self.marginal_entropy(alpha));
        }
        EntropyVectorReal { n, vals }
    }

    /// `H(X_α)` in bits.
    pub fn marginal_entropy(&self, alpha: VarSet) -> f64 {
        let vars: Vec<usize> = alpha.indices().map(|i| i as usize - 1).collect();
        let cells: usize = vars.iter().map(|&v| self.alphabets[v]).product();
        let mut marginal = vec![0.0f64; cells];
        let mut compensation = vec![0.0f64; cells];
        for (index, &p) in self.probs.iter().enumerate() {
            let key = self.project(index, &vars);
            // Kahan accumulation per cell
            let y = p - compensation[key];
            let t = marginal[key] + y;
            compensation[key] = (t - marginal[key]) - y;
            marginal[key] = t;
        }
        let h = -kahan_sum(
            marginal
                .iter()
                .filter(|&&q| q > 0.0)
                .map(|&q| q * q.log2()),
        );
        if h.abs() < 1e-12 {
            0.0
        } else {
            h
        }
    }

    /// Atom coordinates for a row-major index.
    pub fn coords(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.alphabets.len()];
        for (v, &k) in self.alphabets.iter().enumerate().rev() {
            out[v] = index % k;
            index /= k;
        }
        out
    }

    /// Row-major index for atom coordinates.
    pub fn index_of(&self, coords: &[usize]) -> usize {
        let mut index = 0;
        for (v, &k) in self.alphabets.iter().enumerate() {
            index = index * k + coords[v];
        }
        index
    }

    fn project(&self, index: usize, vars: &[usize]) -> usize {
        let coords = self.coords(index);
        let mut key = 0;
        for &v in vars {
            key = key * self.alphabets[v] + coords[v];
        }
        key
    }

    /// Text format: a header `n k1 .. kn`, then one probability per line in
    /// row-major order.
    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<(), ModelError> {
        let ks: Vec<String> = self.alphabets.iter().map(|k| k.to_string()).collect();
        writeln!(w, "{} {}", self.alphabets.len(), ks.join(" "))?;
        for p in &self.probs {
            writeln!(w, "{p:.17e}")?;
        }
        Ok(())
    }

    pub fn read_from<R: BufRead>(r: &mut R) -> Result<JointPMF, ModelError> {
        let mut header = String::new();
        r.read_line(&mut header)?;
        let mut parts = header.split_whitespace();
        let n: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| ModelError::Malformed("missing variable count".into()))?;
        let alphabets: Vec<usize> = parts
            .map(|t| t.parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| ModelError::Malformed("bad alphabet size".into()))?;
        if alphabets.len() != n {
            return Err(ModelError::Malformed(format!(
                "expected {n} alphabet sizes, got {}",
                alphabets.len()
            )));
        }
        let mut probs = Vec::new();
        for line in r.lines() {
            let line = line?;
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            probs.push(
                t.parse::<f64>()
                    .map_err(|_| ModelError::Malformed(format!("bad probability `{t}`")))?,
            );
        }
        JointPMF::new(alphabets, probs)
    }
}

/// Entropy vector in bits, indexed by nonempty subsets in canonical order.
#[derive(Debug, Clone, PartialEq)]
pub struct EntropyVectorReal {
    n: u8,
    vals: Vec<f64>,
}

impl EntropyVectorReal {
    pub fn new(n: u8, vals: Vec<f64>) -> Result<EntropyVectorReal, ModelError> {
        if vals.len() != (1usize << n) - 1 {
            return Err(ModelError::BadTableSize {
                expected: (1usize << n) - 1,
                got: vals.len(),
            });
        }
        Ok(EntropyVectorReal { n, vals })
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn get(&self, alpha: VarSet) -> f64 {
        self.vals[alpha.coord_index().expect("nonempty subset")]
    }

    /// Dense coordinates in canonical order; feeds `LinForm::evaluate`.
    pub fn as_slice(&self) -> &[f64] {
        &self.vals
    }
}

/// Dirichlet(1,..,1)-distributed random pmf (normalized i.i.d. exponentials),
/// reproducible from the seed.
pub fn random_pmf(alphabets: &[usize], seed: u64) -> JointPMF {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_pmf_with(alphabets, &mut rng)
}

pub(crate) fn random_pmf_with<R: Rng>(alphabets: &[usize], rng: &mut R) -> JointPMF {
    let size: usize = alphabets.iter().product();
    let mut weights: Vec<f64> = (0..size)
        .map(|_| -(1.0 - rng.gen::<f64>()).ln())
        .collect();
    let total = kahan_sum(weights.iter().copied());
    for w in &mut weights {
        *w /= total;
    }
    // renormalize exactly once more so the constructor's tolerance holds
    let total = kahan_sum(weights.iter().copied());
    for w in &mut weights {
        *w /= total;
    }
    JointPMF::new(alphabets.to_vec(), weights).expect("normalized table")
}

pub(crate) fn kahan_sum<I: Iterator<Item = f64>>(values: I) -> f64 {
    let mut sum = 0.0;
    let mut c = 0.0;
    for v in values {
        let y = v - c;
        let t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(indices: &[u8]) -> VarSet {
        VarSet::from_indices(indices).unwrap()
    }

    #[test]
    fn independent_fair_bits() {
        let p = JointPMF::new(vec![2, 2], vec![0.25; 4]).unwrap();
        let h = p.entropy_vector();
        assert_eq!(h.as_slice(), &[1.0, 1.0, 2.0]);
    }

    #[test]
    fn copied_bit() {
        let p = JointPMF::new(vec![2, 2], vec![0.5, 0.0, 0.0, 0.5]).unwrap();
        let h = p.entropy_vector();
        assert_eq!(h.as_slice(), &[1.0, 1.0, 1.0]);
    }

    #[test]
    fn xor_triple() {
        // X1, X2 iid fair bits, X3 = X1 xor X2: uniform over 4 atoms
        let mut probs = vec![0.0; 8];
        for x1 in 0..2usize {
            for x2 in 0..2usize {
                let x3 = x1 ^ x2;
                probs[(x1 * 2 + x2) * 2 + x3] = 0.25;
            }
        }
        let p = JointPMF::new(vec![2, 2, 2], probs).unwrap();
        let h = p.entropy_vector();
        assert_eq!(h.as_slice(), &[1.0, 1.0, 2.0, 1.0, 2.0, 2.0, 2.0]);
        assert_eq!(h.get(vs(&[1, 2, 3])), 2.0);
        assert_eq!(h.get(vs(&[3])), 1.0);
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(JointPMF::new(vec![2], vec![0.5, 0.6]).is_err());
        assert!(JointPMF::new(vec![2], vec![1.5, -0.5]).is_err());
        assert!(JointPMF::new(vec![2, 2], vec![0.5, 0.5]).is_err());
        assert!(JointPMF::new(vec![], vec![]).is_err());
    }

    #[test]
    fn random_pmf_is_reproducible_and_normalized() {
        let a = random_pmf(&[2, 2], 7);
        let b = random_pmf(&[2, 2], 7);
        assert_eq!(a.probs(), b.probs());
        let c = random_pmf(&[2, 2], 8);
        assert_ne!(a.probs(), c.probs());
        let sum = kahan_sum(a.probs().iter().copied());
        assert!((sum - 1.0).abs() <= PMF_SUM_TOLERANCE);
    }

    #[test]
    fn file_round_trip() {
        let p = random_pmf(&[2, 3], 42);
        let mut buf = Vec::new();
        p.write_to(&mut buf).unwrap();
        let q = JointPMF::read_from(&mut buf.as_slice()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn row_major_indexing() {
        let p = JointPMF::new(vec![2, 3], vec![1.0, 0.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
        assert_eq!(p.coords(0), vec![0, 0]);
        assert_eq!(p.coords(5), vec![1, 2]);
        assert_eq!(p.index_of(&[1, 2]), 5);
        assert_eq!(p.index_of(&[0, 1]), 1);
    }

    #[test]
    fn marginal_consistency_under_lumping() {
        // h_α from the α-marginal equals h_α recomputed from lumped atoms
        let p = random_pmf(&[2, 3, 2], 11);
        for alpha in VarSet::all_nonempty(3) {
            let direct = p.marginal_entropy(alpha);
            // lump manually
            let vars: Vec<usize> = alpha.indices().map(|i| i as usize - 1).collect();
            let cells: usize = vars.iter().map(|&v| p.alphabets()[v]).product();
            let mut lumped = vec![0.0; cells];
            for (idx, &pr) in p.probs().iter().enumerate() {
                let coords = p.coords(idx);
                let mut key = 0;
                for &v in &vars {
                    key = key * p.alphabets()[v] + coords[v];
                }
                lumped[key] += pr;
            }
            let h = -lumped
                .iter()
                .filter(|&&q| q > 0.0)
                .map(|&q| q * q.log2())
                .sum::<f64>();
            assert!((direct - h).abs() < 1e-12, "α={alpha}");
        }
    }
}
