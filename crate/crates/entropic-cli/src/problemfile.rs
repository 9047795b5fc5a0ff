//! Problem-file format: ordered directives, one goal.
//!
//! ```text
//! # comments and blank lines are ignored
//! vars X1 X2 X3 X4
//! assume: I(X1;X2) = 0
//! assume: I(X1;X2|X3) = 0
//! prove: I(X3;X4) <= I(X3;X4|X1) + I(X3;X4|X2)
//! augment: zy98
//! alphabet: 2
//! budget: 64
//! seed: 7
//! ```
//!
//! The optional `vars` line comes first and makes parsing strict; `assume:`
//! lines precede the single `prove:`/`disprove:` goal; option lines follow.

use anyhow::{anyhow, bail, Result};
use entropic::parser::{parse_statement, Statement, VarTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GoalKind {
    Prove,
    Disprove,
}

pub struct ProblemFile {
    pub table: VarTable,
    pub assumptions: Vec<(String, Statement)>,
    pub goal_kind: GoalKind,
    pub goal: Statement,
    pub augment_zy98: bool,
    pub alphabet: Option<Vec<usize>>,
    pub budget: Option<usize>,
    pub seed: Option<u64>,
}

pub fn parse_problem_file(text: &str) -> Result<ProblemFile> {
    let mut table: Option<VarTable> = None;
    let mut assumptions: Vec<(String, Statement)> = Vec::new();
    let mut goal: Option<(GoalKind, Statement)> = None;
    let mut augment_zy98 = false;
    let mut alphabet = None;
    let mut budget = None;
    let mut seed = None;
    let mut seen_any = false;

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let context = |msg: String| anyhow!("line {}: {msg}", lineno + 1);
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vars") {
            if seen_any {
                bail!(context("`vars` must be the first directive".into()));
            }
            let names: Vec<&str> = rest.split_whitespace().collect();
            if names.is_empty() {
                bail!(context("`vars` needs at least one name".into()));
            }
            table = Some(VarTable::with_declarations(&names).map_err(|e| context(e.to_string()))?);
            seen_any = true;
            continue;
        }
        seen_any = true;
        let table = table.get_or_insert_with(VarTable::auto);
        if let Some(rest) = line.strip_prefix("assume:") {
            if goal.is_some() {
                bail!(context("`assume:` lines must precede the goal".into()));
            }
            let stmt =
                parse_statement(rest.trim(), table).map_err(|e| context(e.to_string()))?;
            if !stmt.is_equality() {
                bail!(context("assumptions must be equalities".into()));
            }
            assumptions.push((rest.trim().to_string(), stmt));
        } else if let Some(rest) = line.strip_prefix("prove:") {
            if goal.is_some() {
                bail!(context("only one goal directive is allowed".into()));
            }
            let stmt =
                parse_statement(rest.trim(), table).map_err(|e| context(e.to_string()))?;
            goal = Some((GoalKind::Prove, stmt));
        } else if let Some(rest) = line.strip_prefix("disprove:") {
            if goal.is_some() {
                bail!(context("only one goal directive is allowed".into()));
            }
            let stmt =
                parse_statement(rest.trim(), table).map_err(|e| context(e.to_string()))?;
            if stmt.is_equality() {
                bail!(context("`disprove:` needs an inequality".into()));
            }
            goal = Some((GoalKind::Disprove, stmt));
        } else if let Some(rest) = line.strip_prefix("augment:") {
            match rest.trim() {
                "zy98" => augment_zy98 = true,
                other => bail!(context(format!("unknown augmentation `{other}`"))),
            }
        } else if let Some(rest) = line.strip_prefix("alphabet:") {
            let ks: Vec<usize> = rest
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| context("bad alphabet size".into()))?;
            if ks.is_empty() || ks.iter().any(|&k| k < 1) {
                bail!(context("alphabet sizes must be positive".into()));
            }
            alphabet = Some(ks);
        } else if let Some(rest) = line.strip_prefix("budget:") {
            budget = Some(
                rest.trim()
                    .parse()
                    .map_err(|_| context("bad budget".into()))?,
            );
        } else if let Some(rest) = line.strip_prefix("seed:") {
            seed = Some(
                rest.trim()
                    .parse()
                    .map_err(|_| context("bad seed".into()))?,
            );
        } else {
            bail!(context(format!("unrecognized directive `{line}`")));
        }
    }

    let (goal_kind, goal) =
        goal.ok_or_else(|| anyhow!("missing `prove:` or `disprove:` goal"))?;
    Ok(ProblemFile {
        table: table.unwrap_or_else(VarTable::auto),
        assumptions,
        goal_kind,
        goal,
        augment_zy98,
        alphabet,
        budget,
        seed,
    })
}
