//! Parser for information-measure expressions and inequality statements.
//!
//! Grammar (ITIP-style, plus a raw-coordinate escape hatch):
//!
//! ```text
//! stmt     := expr REL expr                    REL: ">=" | "<=" | "="
//! expr     := ["+"|"-"] term (("+"|"-") term)*
//! term     := rational | [rational] measure
//! measure  := "H" "(" vlist ["|" vlist] ")"
//!           | "I" "(" vlist ";" vlist ["|" vlist] ")"
//!           | hcoord
//! vlist    := var ("," var)*
//! rational := int ["/" int]
//! hcoord   := "h" digits | "h" "{" int ("," int)* "}"
//! ```
//!
//! Example: the ZY98 inequality is written
//!
//! ```text
//! 2 I(X3;X4) <= I(X1;X2) + I(X1;X3,X4) + 3 I(X3;X4|X1) + I(X3;X4|X2)
//! ```
//!
//! Variable names are identifiers. A declaration (CLI `--vars`, problem-file
//! `vars` line) maps names to indices and makes parsing strict; without one,
//! names auto-assign: a name with a numeric suffix (`X3`) claims that index
//! when free, anything else takes the lowest unused index at first
//! appearance. The `h12`/`h{1,12}` forms address coordinates directly; the
//! compact digit form covers indices 1–9 only.
//!
//! Constant terms other than zero are rejected when lowering: entropy
//! inequalities are homogeneous.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::error::CoreError;
use crate::linform::LinForm;
use crate::rational::{rat, Rat};
use crate::varset::{VarSet, MAX_VARS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: expected {expected}")]
    Syntax { pos: usize, expected: String },

    #[error("unknown variable `{name}` at byte {pos} (strict mode)")]
    UnknownVariable { name: String, pos: usize },

    #[error("more than {MAX_VARS} distinct variables")]
    TooManyVariables,

    #[error("nonzero constant term {0} in an entropy expression")]
    NonHomogeneous(Rat),

    #[error(transparent)]
    Core(#[from] CoreError),
}

/// Maps variable names to 1-based coordinate indices.
pub struct VarTable {
    by_name: BTreeMap<String, u8>,
    taken: u32,
    strict: bool,
    max_index: u8,
}

impl VarTable {
    /// Auto-assigning table for interactive use.
    pub fn auto() -> VarTable {
        VarTable {
            by_name: BTreeMap::new(),
            taken: 0,
            strict: false,
            max_index: 0,
        }
    }

    /// Strict table from a declaration; names take indices 1.. in the order
    /// given, and undeclared names become errors.
    pub fn with_declarations(names: &[&str]) -> Result<VarTable, ParseError> {
        if names.len() > MAX_VARS as usize {
            return Err(ParseError::TooManyVariables);
        }
        let mut t = VarTable::auto();
        t.strict = true;
        for (i, name) in names.iter().enumerate() {
            let idx = (i + 1) as u8;
            if t.by_name.insert(name.to_string(), idx).is_some() {
                return Err(ParseError::Syntax {
                    pos: 0,
                    expected: format!("distinct variable names (duplicate `{name}`)"),
                });
            }
            t.taken |= 1 << (idx - 1);
            t.max_index = t.max_index.max(idx);
        }
        Ok(t)
    }

    /// Largest index in use; the inferred variable count.
    pub fn n(&self) -> u8 {
        self.max_index
    }

    /// Names and indices, sorted by index.
    pub fn bindings(&self) -> Vec<(String, u8)> {
        let mut v: Vec<(String, u8)> = self
            .by_name
            .iter()
            .map(|(k, i)| (k.clone(), *i))
            .collect();
        v.sort_by_key(|(_, i)| *i);
        v
    }

    fn resolve(&mut self, name: &str, pos: usize) -> Result<u8, ParseError> {
        if let Some(i) = self.by_name.get(name) {
            return Ok(*i);
        }
        if self.strict {
            return Err(ParseError::UnknownVariable {
                name: name.to_string(),
                pos,
            });
        }
        let idx = self
            .preferred_index(name)
            .or_else(|| self.first_free())
            .ok_or(ParseError::TooManyVariables)?;
        self.by_name.insert(name.to_string(), idx);
        self.taken |= 1 << (idx - 1);
        self.max_index = self.max_index.max(idx);
        Ok(idx)
    }

    // `X3` claims index 3 when free, so statements render with the
    // coordinates a reader expects regardless of appearance order.
    fn preferred_index(&self, name: &str) -> Option<u8> {
        let digits_at = name.find(|c: char| c.is_ascii_digit())?;
        if name[digits_at..].chars().any(|c| !c.is_ascii_digit()) {
            return None;
        }
        let idx: u8 = name[digits_at..].parse().ok()?;
        if (1..=MAX_VARS).contains(&idx) && self.taken & (1 << (idx - 1)) == 0 {
            Some(idx)
        } else {
            None
        }
    }

    fn first_free(&self) -> Option<u8> {
        (1..=MAX_VARS).find(|i| self.taken & (1 << (i - 1)) == 0)
    }

    /// Record a raw-coordinate index so `n` covers it.
    fn note_index(&mut self, idx: u8) {
        self.max_index = self.max_index.max(idx);
    }
}

/// Expression tree over information measures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprAst {
    /// `H(groups | cond)`
    EntropyTerm { groups: VarSet, cond: VarSet },
    /// `I(left ; right | cond)`
    MutualTerm {
        left: VarSet,
        right: VarSet,
        cond: VarSet,
    },
    /// Raw coordinate `h_α`.
    HCoord(VarSet),
    /// Rational literal; only zero survives lowering.
    Const(Rat),
    Scaled(Rat, Box<ExprAst>),
    Sum(Vec<ExprAst>),
}

impl ExprAst {
    /// Expand into an exact linear form over `n` variables.
    pub fn lower(&self, n: u8) -> Result<LinForm, ParseError> {
        match self {
            ExprAst::EntropyTerm { groups, cond } => {
                Ok(LinForm::cond_entropy(n, *groups, *cond)?)
            }
            ExprAst::MutualTerm { left, right, cond } => {
                Ok(LinForm::mutual(n, *left, *right, *cond)?)
            }
            ExprAst::HCoord(s) => Ok(LinForm::entropy(n, *s)?),
            ExprAst::Const(c) => {
                if c.is_zero() {
                    Ok(LinForm::zero(n))
                } else {
                    Err(ParseError::NonHomogeneous(c.clone()))
                }
            }
            ExprAst::Scaled(c, inner) => Ok(inner.lower(n)?.scaled(c)),
            ExprAst::Sum(parts) => {
                let mut acc = LinForm::zero(n);
                for p in parts {
                    acc = &acc + &p.lower(n)?;
                }
                Ok(acc)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Ge,
    Le,
    Eq,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Ge => ">=",
            Relation::Le => "<=",
            Relation::Eq => "=",
        })
    }
}

/// A parsed `lhs REL rhs` statement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Statement {
    pub lhs: ExprAst,
    pub relation: Relation,
    pub rhs: ExprAst,
}

impl Statement {
    /// True when the statement is an equality.
    pub fn is_equality(&self) -> bool {
        self.relation == Relation::Eq
    }

    /// Normalize to a single form `f` meaning `f ≥ 0` (inequalities, with
    /// `<=` negated) or `f = 0` (equalities).
    pub fn lower(&self, n: u8) -> Result<LinForm, ParseError> {
        let lhs = self.lhs.lower(n)?;
        let rhs = self.rhs.lower(n)?;
        Ok(match self.relation {
            Relation::Ge | Relation::Eq => &lhs - &rhs,
            Relation::Le => &rhs - &lhs,
        })
    }
}

/// Parse a bare expression.
pub fn parse_expr(text: &str, vars: &mut VarTable) -> Result<ExprAst, ParseError> {
    let tokens = lex(text)?;
    let mut p = Parser {
        tokens: &tokens,
        pos: 0,
        vars,
    };
    let e = p.expr()?;
    p.expect_end()?;
    Ok(e)
}

/// Parse an inequality/equality statement.
pub fn parse_statement(text: &str, vars: &mut VarTable) -> Result<Statement, ParseError> {
    let tokens = lex(text)?;
    let mut p = Parser {
        tokens: &tokens,
        pos: 0,
        vars,
    };
    let lhs = p.expr()?;
    let relation = p.relation()?;
    let rhs = p.expr()?;
    p.expect_end()?;
    Ok(Statement { lhs, relation, rhs })
}

/// Canonical rendering of a linear form; `parse` of the result lowers back
/// to the same form.
pub fn format(f: &LinForm) -> String {
    f.to_string()
}

/// Parse a conditional-independence statement: a bare mutual-information
/// term `I(A;B|C)` or the equality `I(A;B|C) = 0`. Returns the
/// `(left, right, cond)` sets.
pub fn parse_ci(
    text: &str,
    vars: &mut VarTable,
) -> Result<(VarSet, VarSet, VarSet), ParseError> {
    let ast = if text.contains('=') {
        let stmt = parse_statement(text, vars)?;
        let zero = |e: &ExprAst| matches!(e, ExprAst::Const(c) if c.is_zero());
        match (&stmt, stmt.relation) {
            (s, Relation::Eq) if zero(&s.rhs) => s.lhs.clone(),
            (s, Relation::Eq) if zero(&s.lhs) => s.rhs.clone(),
            _ => {
                return Err(ParseError::Syntax {
                    pos: 0,
                    expected: "a conditional independence `I(A;B|C) = 0`".into(),
                })
            }
        }
    } else {
        parse_expr(text, vars)?
    };
    match ast {
        ExprAst::MutualTerm { left, right, cond } => Ok((left, right, cond)),
        _ => Err(ParseError::Syntax {
            pos: 0,
            expected: "a single mutual-information term `I(A;B|C)`".into(),
        }),
    }
}

// ---------------------------------------------------------------- lexing --

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Slash,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Semi,
    Bar,
    Ge,
    Le,
    Eq,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    pos: usize,
    end: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let pos = i;
        let simple = |tok: Tok| Spanned {
            tok,
            pos,
            end: pos + 1,
        };
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Spanned {
                    tok: Tok::Num(text[start..i].to_string()),
                    pos,
                    end: i,
                });
            }
            b'A'..=b'Z' | b'a'..=b'z' | b'_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push(Spanned {
                    tok: Tok::Ident(text[start..i].to_string()),
                    pos,
                    end: i,
                });
            }
            b'+' => {
                out.push(simple(Tok::Plus));
                i += 1;
            }
            b'-' => {
                out.push(simple(Tok::Minus));
                i += 1;
            }
            b'/' => {
                out.push(simple(Tok::Slash));
                i += 1;
            }
            b'(' => {
                out.push(simple(Tok::LParen));
                i += 1;
            }
            b')' => {
                out.push(simple(Tok::RParen));
                i += 1;
            }
            b'{' => {
                out.push(simple(Tok::LBrace));
                i += 1;
            }
            b'}' => {
                out.push(simple(Tok::RBrace));
                i += 1;
            }
            b',' => {
                out.push(simple(Tok::Comma));
                i += 1;
            }
            b';' => {
                out.push(simple(Tok::Semi));
                i += 1;
            }
            b'|' => {
                out.push(simple(Tok::Bar));
                i += 1;
            }
            b'>' | b'<' => {
                if i + 1 < bytes.len() && bytes[i + 1] == b'=' {
                    out.push(Spanned {
                        tok: if b == b'>' { Tok::Ge } else { Tok::Le },
                        pos,
                        end: pos + 2,
                    });
                    i += 2;
                } else {
                    return Err(ParseError::Syntax {
                        pos,
                        expected: "`>=` or `<=`".into(),
                    });
                }
            }
            b'=' => {
                out.push(simple(Tok::Eq));
                i += 1;
                // tolerate `==`
                if i < bytes.len() && bytes[i] == b'=' {
                    i += 1;
                }
            }
            _ => {
                return Err(ParseError::Syntax {
                    pos,
                    expected: "a measure, coordinate, rational, or operator".into(),
                });
            }
        }
    }
    Ok(out)
}

// --------------------------------------------------------------- parsing --

struct Parser<'a, 'v> {
    tokens: &'a [Spanned],
    pos: usize,
    vars: &'v mut VarTable,
}

impl Parser<'_, '_> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|s| &s.tok)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|s| s.pos)
            .unwrap_or_else(|| self.tokens.last().map(|s| s.end).unwrap_or(0))
    }

    fn bump(&mut self) -> Option<&Spanned> {
        let t = self.tokens.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(self.err(what))
        }
    }

    fn err(&self, expected: &str) -> ParseError {
        ParseError::Syntax {
            pos: self.here(),
            expected: expected.to_string(),
        }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        if self.pos == self.tokens.len() {
            Ok(())
        } else {
            Err(self.err("end of input"))
        }
    }

    fn relation(&mut self) -> Result<Relation, ParseError> {
        match self.peek() {
            Some(Tok::Ge) => {
                self.pos += 1;
                Ok(Relation::Ge)
            }
            Some(Tok::Le) => {
                self.pos += 1;
                Ok(Relation::Le)
            }
            Some(Tok::Eq) => {
                self.pos += 1;
                Ok(Relation::Eq)
            }
            _ => Err(self.err("`>=`, `<=`, or `=`")),
        }
    }

    fn expr(&mut self) -> Result<ExprAst, ParseError> {
        let mut parts = Vec::new();
        let mut negate = false;
        if self.eat(&Tok::Minus) {
            negate = true;
        } else {
            self.eat(&Tok::Plus);
        }
        loop {
            let term = self.term()?;
            parts.push(if negate {
                ExprAst::Scaled(rat(-1), Box::new(term))
            } else {
                term
            });
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    negate = false;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    negate = true;
                }
                _ => break,
            }
            // absorb an explicit sign on the following term, so rendered
            // forms concatenate with `+` unchanged
            if self.eat(&Tok::Minus) {
                negate = !negate;
            } else {
                self.eat(&Tok::Plus);
            }
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            ExprAst::Sum(parts)
        })
    }

    fn term(&mut self) -> Result<ExprAst, ParseError> {
        if matches!(self.peek(), Some(Tok::Num(_))) {
            let c = self.rational()?;
            return Ok(match self.peek() {
                Some(Tok::Ident(_)) => {
                    let m = self.measure()?;
                    ExprAst::Scaled(c, Box::new(m))
                }
                _ => ExprAst::Const(c),
            });
        }
        self.measure()
    }

    fn rational(&mut self) -> Result<Rat, ParseError> {
        let num = match self.bump() {
            Some(Spanned {
                tok: Tok::Num(s), ..
            }) => s.clone(),
            _ => return Err(self.err("a number")),
        };
        let numer: i128 = num.parse().map_err(|_| self.err("a number within range"))?;
        if self.eat(&Tok::Slash) {
            let den = match self.bump() {
                Some(Spanned {
                    tok: Tok::Num(s), ..
                }) => s.clone(),
                _ => return Err(self.err("a denominator")),
            };
            let denom: i128 = den.parse().map_err(|_| self.err("a number within range"))?;
            if denom == 0 {
                return Err(self.err("a nonzero denominator"));
            }
            Ok(Rat::new(numer.into(), denom.into()))
        } else {
            Ok(Rat::from_integer(numer.into()))
        }
    }

    fn measure(&mut self) -> Result<ExprAst, ParseError> {
        let pos = self.here();
        let name = match self.peek() {
            Some(Tok::Ident(s)) => s.clone(),
            _ => return Err(self.err("a measure `H(..)`, `I(..)`, or coordinate `h..`")),
        };
        match name.as_str() {
            "H" => {
                self.pos += 1;
                self.expect(Tok::LParen, "`(` after H")?;
                let groups = self.vlist()?;
                let cond = if self.eat(&Tok::Bar) {
                    self.vlist()?
                } else {
                    VarSet::EMPTY
                };
                self.expect(Tok::RParen, "`)`")?;
                Ok(ExprAst::EntropyTerm { groups, cond })
            }
            "I" => {
                self.pos += 1;
                self.expect(Tok::LParen, "`(` after I")?;
                let left = self.vlist()?;
                self.expect(Tok::Semi, "`;` between the arguments of I")?;
                let right = self.vlist()?;
                let cond = if self.eat(&Tok::Bar) {
                    self.vlist()?
                } else {
                    VarSet::EMPTY
                };
                self.expect(Tok::RParen, "`)`")?;
                Ok(ExprAst::MutualTerm { left, right, cond })
            }
            "h" => {
                self.pos += 1;
                self.expect(Tok::LBrace, "`{` after h")?;
                let mut indices = Vec::new();
                loop {
                    let idx = self.small_int()?;
                    indices.push(idx);
                    if !self.eat(&Tok::Comma) {
                        break;
                    }
                }
                self.expect(Tok::RBrace, "`}`")?;
                self.hcoord(&indices, pos)
            }
            _ => {
                if let Some(rest) = name.strip_prefix('h') {
                    if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
                        self.pos += 1;
                        let indices: Vec<u8> = rest.bytes().map(|b| b - b'0').collect();
                        return self.hcoord(&indices, pos);
                    }
                }
                Err(self.err("a measure `H(..)`, `I(..)`, or coordinate `h..`"))
            }
        }
    }

    fn hcoord(&mut self, indices: &[u8], pos: usize) -> Result<ExprAst, ParseError> {
        let set = VarSet::from_indices(indices).map_err(|_| ParseError::Syntax {
            pos,
            expected: "coordinate indices in 1..=16".into(),
        })?;
        if set.is_empty() {
            return Err(ParseError::Syntax {
                pos,
                expected: "a nonempty coordinate index set".into(),
            });
        }
        self.vars.note_index(set.max_index());
        Ok(ExprAst::HCoord(set))
    }

    fn small_int(&mut self) -> Result<u8, ParseError> {
        match self.bump() {
            Some(Spanned {
                tok: Tok::Num(s), ..
            }) => s.parse().map_err(|_| ParseError::Syntax {
                pos: self.here(),
                expected: "an index in 1..=16".into(),
            }),
            _ => Err(self.err("an index")),
        }
    }

    fn vlist(&mut self) -> Result<VarSet, ParseError> {
        let mut set = VarSet::EMPTY;
        loop {
            let pos = self.here();
            let name = match self.bump() {
                Some(Spanned {
                    tok: Tok::Ident(s), ..
                }) => s.clone(),
                _ => return Err(self.err("a variable name")),
            };
            let idx = self.vars.resolve(&name, pos)?;
            set = set.union(VarSet::singleton(idx).expect("validated index"));
            if !self.eat(&Tok::Comma) {
                break;
            }
        }
        Ok(set)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn vs(indices: &[u8]) -> VarSet {
        VarSet::from_indices(indices).unwrap()
    }

    #[test]
    fn parses_mutual_information() {
        let mut t = VarTable::auto();
        let e = parse_expr("I(X1;X2)", &mut t).unwrap();
        assert_eq!(
            e,
            ExprAst::MutualTerm {
                left: vs(&[1]),
                right: vs(&[2]),
                cond: VarSet::EMPTY
            }
        );
        assert_eq!(t.n(), 2);
    }

    #[test]
    fn parses_scaled_conditional_term() {
        let mut t = VarTable::auto();
        let e = parse_expr("3 I(X3;X4|X1)", &mut t).unwrap();
        assert_eq!(
            e,
            ExprAst::Scaled(
                rat(3),
                Box::new(ExprAst::MutualTerm {
                    left: vs(&[3]),
                    right: vs(&[4]),
                    cond: vs(&[1])
                })
            )
        );
        assert_eq!(t.n(), 4);
    }

    #[test]
    fn parses_grouped_conditional_entropy() {
        let mut t = VarTable::auto();
        let e = parse_expr("H(X1,X2|X3)", &mut t).unwrap();
        assert_eq!(
            e,
            ExprAst::EntropyTerm {
                groups: vs(&[1, 2]),
                cond: vs(&[3])
            }
        );
        let f = e.lower(3).unwrap();
        assert_eq!(f.to_string(), "-1 h3 +1 h123");
    }

    #[test]
    fn lowers_zy98_statement() {
        let mut t = VarTable::auto();
        let s = parse_statement(
            "2 I(X3;X4) <= I(X1;X2) + I(X1;X3,X4) + 3 I(X3;X4|X1) + I(X3;X4|X2)",
            &mut t,
        )
        .unwrap();
        let f = s.lower(t.n()).unwrap();
        assert_eq!(f.term_count(), 11);
        assert_eq!(
            f.to_string(),
            "-1 h1 -1 h12 -2 h3 +3 h13 +1 h23 -2 h4 +3 h14 +1 h24 +3 h34 -4 h134 -1 h234"
        );
    }

    #[test]
    fn cancellation_gives_zero_form() {
        let mut t = VarTable::auto();
        let e = parse_expr("H(X1) - H(X1)", &mut t).unwrap();
        assert!(e.lower(t.n()).unwrap().is_zero());
    }

    #[test]
    fn statement_relations_normalize() {
        let mut t = VarTable::auto();
        let s = parse_statement("I(X1;X2) >= 0", &mut t).unwrap();
        assert!(!s.is_equality());
        assert_eq!(s.lower(t.n()).unwrap().to_string(), "+1 h1 +1 h2 -1 h12");

        let mut t = VarTable::auto();
        let s = parse_statement("0 <= I(X1;X2)", &mut t).unwrap();
        assert_eq!(s.lower(t.n()).unwrap().to_string(), "+1 h1 +1 h2 -1 h12");

        let mut t = VarTable::auto();
        let s = parse_statement("I(X1;X2) = 0", &mut t).unwrap();
        assert!(s.is_equality());
    }

    #[test]
    fn rejects_nonzero_constants_when_lowering() {
        let mut t = VarTable::auto();
        let s = parse_statement("H(X1) >= 1", &mut t).unwrap();
        assert!(matches!(s.lower(t.n()), Err(ParseError::NonHomogeneous(_))));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let mut t = VarTable::auto();
        let err = parse_expr("I(X1;X2", &mut t).unwrap_err();
        match err {
            ParseError::Syntax { pos, .. } => assert_eq!(pos, 7),
            other => panic!("unexpected error {other:?}"),
        }
        let mut t = VarTable::auto();
        assert!(parse_expr("J(X1)", &mut t).is_err());
    }

    #[test]
    fn strict_mode_rejects_undeclared_names() {
        let mut t = VarTable::with_declarations(&["A", "B"]).unwrap();
        assert!(parse_expr("I(A;B)", &mut t).is_ok());
        let err = parse_expr("I(A;C)", &mut t).unwrap_err();
        assert!(matches!(err, ParseError::UnknownVariable { .. }));
    }

    #[test]
    fn auto_assignment_prefers_numeric_suffixes() {
        let mut t = VarTable::auto();
        parse_expr("I(X3;X4|X1)", &mut t).unwrap();
        let b = t.bindings();
        assert_eq!(
            b,
            vec![
                ("X1".to_string(), 1),
                ("X3".to_string(), 3),
                ("X4".to_string(), 4)
            ]
        );
        // non-numeric names take first-appearance order
        let mut t = VarTable::auto();
        parse_expr("I(A;B|C)", &mut t).unwrap();
        assert_eq!(
            t.bindings(),
            vec![
                ("A".to_string(), 1),
                ("B".to_string(), 2),
                ("C".to_string(), 3)
            ]
        );
    }

    #[test]
    fn raw_coordinates_parse_in_both_forms() {
        let mut t = VarTable::auto();
        let e = parse_expr("h12", &mut t).unwrap();
        assert_eq!(e, ExprAst::HCoord(vs(&[1, 2])));
        let e = parse_expr("h{2,10}", &mut t).unwrap();
        assert_eq!(e, ExprAst::HCoord(vs(&[2, 10])));
        assert_eq!(t.n(), 10);
        assert!(parse_expr("h0", &mut t).is_err());
    }

    #[test]
    fn canonical_format_round_trips() {
        let mut t = VarTable::auto();
        let f = parse_statement("I(X1;X2|X3) >= 0", &mut t)
            .unwrap()
            .lower(t.n())
            .unwrap();
        let text = format(&f);
        let mut t2 = VarTable::auto();
        let f2 = parse_expr(&text, &mut t2).unwrap().lower(3).unwrap();
        assert_eq!(f, f2);

        let half = LinForm::entropy(1, vs(&[1])).unwrap().scaled(&frac(1, 2));
        assert_eq!(format(&half), "+1/2 h1");
        let mut t3 = VarTable::auto();
        let back = parse_expr("+1/2 h1", &mut t3).unwrap().lower(1).unwrap();
        assert_eq!(back, half);
        assert_eq!(format(&LinForm::zero(2)), "0");
    }
}
