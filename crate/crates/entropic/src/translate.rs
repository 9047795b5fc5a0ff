//! Translations of entropy inequalities into sibling domains.
//!
//! A valid linear entropy inequality `∑ c_α h_α ≥ 0` transfers
//! mechanically along three correspondences:
//!
//! - **Group form**: `h_α ↦ log(|G|/|∩_{i∈α} G_i|)` for a finite group `G`
//!   with subgroups `G_i`. Clearing denominators and multiplying out gives a
//!   product inequality over subgroup-intersection orders, e.g.
//!   `|G| |G_12| >= |G_1| |G_2|` for `I(X1;X2) ≥ 0`.
//! - **Principal-minor form**: the Gaussian substitution
//!   `h(X_α) = ½ log[(2πe)^|α| |K_α|]` for a positive semi-definite `K`.
//!   The `(2πe)` factors cancel exactly when the inequality is balanced,
//!   which is also the criterion for differential-entropy validity, so
//!   balance is a hard precondition here. The independence bound becomes
//!   Hadamard's inequality `|K_1..n| <= |K_1| .. |K_n|`.
//! - **Kolmogorov form**: `h_α ↦ K(x_α)`; linear inequalities valid for
//!   entropy are exactly those valid for Kolmogorov complexity (up to the
//!   additive constants inherent in that theory, which the rendering leaves
//!   implicit).
//!
//! `G_13` abbreviates `G_1 ∩ G_3`. Renderings are ASCII with cleared integer
//! exponents, factors in canonical subset order; the structured term list
//! keeps the exact source coefficients so the entropy form can be
//! reconstructed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::error::CoreError;
use crate::linform::LinForm;
use crate::rational::{frac, Rat};
use crate::varset::VarSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TranslateError {
    #[error(
        "not balanced: coefficients over subsets containing variable {variable} sum to {sum}, \
         so the differential-entropy substitution is invalid"
    )]
    Unbalanced { variable: u8, sum: Rat },

    #[error(transparent)]
    Core(#[from] CoreError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TranslationKind {
    Group,
    Minor,
    Kolmogorov,
}

impl TranslationKind {
    pub fn name(&self) -> &'static str {
        match self {
            TranslationKind::Group => "group",
            TranslationKind::Minor => "minor",
            TranslationKind::Kolmogorov => "kolmogorov",
        }
    }
}

/// A rendered translation plus the exact coefficients it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslatedInequality {
    pub kind: TranslationKind,
    /// `(subset, coefficient)` pairs of the source form, canonical order.
    pub terms: Vec<(VarSet, Rat)>,
    /// Primary rendering: the cleared product inequality for group/minor
    /// kinds, the linear inequality for the Kolmogorov kind.
    pub text: String,
    /// Log-form rendering, where one exists for the kind.
    pub log_text: Option<String>,
}

impl TranslatedInequality {
    /// Reconstruct the source linear form from the structured term list.
    pub fn to_linform(&self, n: u8) -> Result<LinForm, CoreError> {
        LinForm::from_terms(n, self.terms.iter().cloned())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(s, c)| {
                serde_json::json!({
                    "subset": s.indices().collect::<Vec<u8>>(),
                    "coeff": c.to_string(),
                })
            })
            .collect();
        let mut obj = serde_json::json!({
            "kind": self.kind.name(),
            "terms": terms,
            "text": self.text,
        });
        if let Some(log_text) = &self.log_text {
            obj["log_text"] = serde_json::json!(log_text);
        }
        obj
    }
}

/// Group-theoretic form of `b ≥ 0`; every linear form maps.
pub fn to_group_inequality(b: &LinForm) -> TranslatedInequality {
    let exponents = cleared_exponents(b);
    // Π (|G|/|G_α|)^{e_α} ≥ 1, i.e.
    // |G|^{Σe} · Π_{e<0} |G_α|^{|e|}  ≥  Π_{e>0} |G_α|^{e}.
    let order_exponent: BigInt = exponents.iter().map(|(_, e)| e.clone()).sum();
    let mut lhs: Vec<String> = Vec::new();
    let mut rhs: Vec<String> = Vec::new();
    if order_exponent.is_positive() {
        lhs.push(power("|G|", &order_exponent));
    } else if order_exponent.is_negative() {
        rhs.push(power("|G|", &-&order_exponent));
    }
    for (alpha, e) in &exponents {
        let symbol = format!("|G_{}|", alpha.label());
        if e.is_negative() {
            lhs.push(power(&symbol, &-e));
        } else if e.is_positive() {
            rhs.push(power(&symbol, e));
        }
    }
    let text = format!("{} >= {}", side(lhs), side(rhs));
    let log_text = Some(log_form(b, |alpha| {
        format!("log(|G|/|G_{}|)", alpha.label())
    }));
    TranslatedInequality {
        kind: TranslationKind::Group,
        terms: b.terms().map(|(s, c)| (s, c.clone())).collect(),
        text,
        log_text,
    }
}

/// Principal-minor (Gaussian) form of `b ≥ 0`; requires balance.
pub fn to_minor_inequality(b: &LinForm) -> Result<TranslatedInequality, TranslateError> {
    for variable in 1..=b.n() {
        let mut sum = Rat::zero();
        for (s, c) in b.terms() {
            if s.contains(variable) {
                sum += c;
            }
        }
        if !sum.is_zero() {
            return Err(TranslateError::Unbalanced { variable, sum });
        }
    }
    let exponents = cleared_exponents(b);
    // ∑ c_α·½log|K_α| ≥ 0  ⟺  Π_{e<0} |K_α|^{|e|} ≤ Π_{e>0} |K_α|^{e}.
    let mut lhs: Vec<String> = Vec::new();
    let mut rhs: Vec<String> = Vec::new();
    for (alpha, e) in &exponents {
        let symbol = format!("|K_{}|", alpha.label());
        if e.is_negative() {
            lhs.push(power(&symbol, &-e));
        } else if e.is_positive() {
            rhs.push(power(&symbol, e));
        }
    }
    let text = format!("{} <= {}", side(lhs), side(rhs));
    let log_text = Some(log_form(&b.scaled(&frac(1, 2)), |alpha| {
        format!("log|K_{}|", alpha.label())
    }));
    Ok(TranslatedInequality {
        kind: TranslationKind::Minor,
        terms: b.terms().map(|(s, c)| (s, c.clone())).collect(),
        text,
        log_text,
    })
}

/// Kolmogorov-complexity form of `b ≥ 0`; every linear form maps.
pub fn to_kolmogorov(b: &LinForm) -> TranslatedInequality {
    let mut lhs: Vec<String> = Vec::new();
    let mut rhs: Vec<String> = Vec::new();
    for (alpha, c) in b.terms() {
        let vars: Vec<String> = alpha.indices().map(|i| format!("x{i}")).collect();
        let symbol = format!("K({})", vars.join(","));
        let magnitude = c.abs();
        let rendered = if magnitude.is_one() {
            symbol
        } else {
            format!("{magnitude} {symbol}")
        };
        if c.is_positive() {
            lhs.push(rendered);
        } else {
            rhs.push(rendered);
        }
    }
    let join = |parts: Vec<String>| {
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    };
    let text = format!("{} >= {}", join(lhs), join(rhs));
    TranslatedInequality {
        kind: TranslationKind::Kolmogorov,
        terms: b.terms().map(|(s, c)| (s, c.clone())).collect(),
        text,
        log_text: None,
    }
}

/// Integer exponents `e_α = c_α · lcm(denominators)`, canonical order.
fn cleared_exponents(b: &LinForm) -> Vec<(VarSet, BigInt)> {
    let mut lcm = BigInt::one();
    for (_, c) in b.terms() {
        lcm = lcm.lcm(c.denom());
    }
    b.terms()
        .map(|(s, c)| (s, (c * Rat::from_integer(lcm.clone())).to_integer()))
        .collect()
}

fn power(symbol: &str, exponent: &BigInt) -> String {
    if exponent.is_one() {
        symbol.to_string()
    } else {
        format!("{symbol}^{exponent}")
    }
}

fn side(factors: Vec<String>) -> String {
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join(" ")
    }
}

fn log_form<F: Fn(VarSet) -> String>(b: &LinForm, symbol: F) -> String {
    if b.is_zero() {
        return "0 >= 0".to_string();
    }
    let mut out = String::new();
    for (alpha, c) in b.terms() {
        if !out.is_empty() {
            out.push(' ');
        }
        let sign = if c.is_negative() { '-' } else { '+' };
        out.push_str(&format!("{sign}{} {}", c.abs(), symbol(alpha)));
    }
    out.push_str(" >= 0");
    out
}
