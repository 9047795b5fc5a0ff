//! Finite groups with designated subgroups.
//!
//! A group `G` with subgroups `G_1, .., G_n` characterizes the vector
//! `h_α = log₂(|G| / |∩_{i∈α} G_i|)`; such vectors satisfy every valid
//! entropy inequality, which makes them exact integer test points: the
//! inequality `∑ c_α h_α ≥ 0` becomes, after clearing denominators, a
//! comparison of two products of subgroup-intersection orders that can be
//! decided in big-integer arithmetic with no rounding at all.
//!
//! Groups are explicit multiplication tables capped at order 512, plenty
//! for desk-scale checks without a computational-group-theory dependency.

use std::io::{BufRead, Write};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use rand::Rng;

use crate::linform::LinForm;
use crate::models::pmf::{EntropyVectorReal, ModelError};
use crate::rational::Rat;
use crate::varset::MAX_VARS;

/// Largest supported group order.
pub const MAX_GROUP_ORDER: usize = 512;

/// A finite group given by its multiplication table, with `n` designated
/// subgroups listed as element sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    mul: Vec<Vec<u16>>,
    identity: usize,
    subgroups: Vec<Vec<usize>>,
}

impl GroupSpec {
    /// Validate a multiplication table and subgroup lists. Checks
    /// associativity, the identity, inverses, and for each subgroup:
    /// membership of the identity, closure, and inverses (Lagrange follows).
    pub fn new(mul: Vec<Vec<u16>>, subgroups: Vec<Vec<usize>>) -> Result<GroupSpec, ModelError> {
        let m = mul.len();
        if m == 0 || m > MAX_GROUP_ORDER {
            return Err(ModelError::InvalidGroup(format!(
                "order must be 1..={MAX_GROUP_ORDER}, got {m}"
            )));
        }
        for row in &mul {
            if row.len() != m {
                return Err(ModelError::InvalidGroup("table is not square".into()));
            }
            if row.iter().any(|&x| x as usize >= m) {
                return Err(ModelError::InvalidGroup("entry out of range".into()));
            }
        }
        let identity = (0..m)
            .find(|&e| (0..m).all(|x| mul[e][x] as usize == x && mul[x][e] as usize == x))
            .ok_or_else(|| ModelError::InvalidGroup("no identity element".into()))?;
        for (x, row) in mul.iter().enumerate() {
            if !(0..m).any(|y| row[y] as usize == identity && mul[y][x] as usize == identity) {
                return Err(ModelError::InvalidGroup(format!("element {x} has no inverse")));
            }
        }
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    if mul[mul[a][b] as usize][c] != mul[a][mul[b][c] as usize] {
                        return Err(ModelError::InvalidGroup(format!(
                            "not associative at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        let g = GroupSpec {
            mul,
            identity,
            subgroups: Vec::new(),
        };
        g.with_subgroups(subgroups)
    }

    /// Replace the designated subgroups (validated).
    pub fn with_subgroups(mut self, subgroups: Vec<Vec<usize>>) -> Result<GroupSpec, ModelError> {
        if subgroups.len() > MAX_VARS as usize {
            return Err(ModelError::InvalidGroup(format!(
                "at most {MAX_VARS} subgroups supported"
            )));
        }
        let m = self.order();
        let mut cleaned = Vec::with_capacity(subgroups.len());
        for (k, sub) in subgroups.into_iter().enumerate() {
            let mut elems = sub;
            elems.sort_unstable();
            elems.dedup();
            if elems.iter().any(|&x| x >= m) {
                return Err(ModelError::InvalidGroup(format!(
                    "subgroup {k} has an element out of range"
                )));
            }
            if !elems.contains(&self.identity) {
                return Err(ModelError::InvalidGroup(format!(
                    "subgroup {k} misses the identity"
                )));
            }
            let inside = |x: usize| elems.binary_search(&x).is_ok();
            for &a in &elems {
                for &b in &elems {
                    if !inside(self.mul[a][b] as usize) {
                        return Err(ModelError::InvalidGroup(format!(
                            "subgroup {k} is not closed"
                        )));
                    }
                }
                if !elems.iter().any(|&b| self.mul[a][b] as usize == self.identity) {
                    return Err(ModelError::InvalidGroup(format!(
                        "subgroup {k} misses an inverse"
                    )));
                }
            }
            if !m.is_multiple_of(elems.len()) {
                return Err(ModelError::InvalidGroup(format!(
                    "subgroup {k} order {} does not divide {m}",
                    elems.len()
                )));
            }
            cleaned.push(elems);
        }
        self.subgroups = cleaned;
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn subgroups(&self) -> &[Vec<usize>] {
        &self.subgroups
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b] as usize
    }

    /// The cyclic group Z_m.
    pub fn cyclic(m: usize) -> GroupSpec {
        assert!((1..=MAX_GROUP_ORDER).contains(&m));
        let mul = (0..m)
            .map(|a| (0..m).map(|b| ((a + b) % m) as u16).collect())
            .collect();
        GroupSpec {
            mul,
            identity: 0,
            subgroups: Vec::new(),
        }
    }

    /// The dihedral group of order `2k` (symmetries of the regular k-gon).
    /// Element `a + k·b` is rotation `r^a` for `b = 0` and reflection
    /// `r^a s` for `b = 1`.
    pub fn dihedral(k: usize) -> GroupSpec {
        assert!(k >= 1 && 2 * k <= MAX_GROUP_ORDER);
        let m = 2 * k;
        let mut mul = vec![vec![0u16; m]; m];
        for a in 0..k {
            for b in 0..2 {
                for c in 0..k {
                    for d in 0..2 {
                        let rot = if b == 0 { (a + c) % k } else { (a + k - c) % k };
                        let refl = (b + d) % 2;
                        mul[a + k * b][c + k * d] = (rot + k * refl) as u16;
                    }
                }
            }
        }
        GroupSpec {
            mul,
            identity: 0,
            subgroups: Vec::new(),
        }
    }

    /// The symmetric group S_k for `k ≤ 5`, elements being the permutations
    /// of `{0, .., k−1}` in lexicographic order; `p·q` acts as `p∘q`.
    pub fn symmetric(k: usize) -> GroupSpec {
        assert!((1..=5).contains(&k), "S_k supported for k <= 5");
        let perms = permutations(k);
        let index_of = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).unwrap();
        let m = perms.len();
        let mut mul = vec![vec![0u16; m]; m];
        for (a, p) in perms.iter().enumerate() {
            for (b, q) in perms.iter().enumerate() {
                let composed: Vec<usize> = (0..k).map(|x| p[q[x]]).collect();
                mul[a][b] = index_of(&composed) as u16;
            }
        }
        let identity = index_of(&(0..k).collect::<Vec<_>>());
        GroupSpec {
            mul,
            identity,
            subgroups: Vec::new(),
        }
    }

    /// Direct product; element `a·|H| + b` pairs `a ∈ G` with `b ∈ H`.
    pub fn direct_product(&self, other: &GroupSpec) -> GroupSpec {
        let m1 = self.order();
        let m2 = other.order();
        let m = m1 * m2;
        assert!(m <= MAX_GROUP_ORDER, "product order exceeds {MAX_GROUP_ORDER}");
        let mut mul = vec![vec![0u16; m]; m];
        for a1 in 0..m1 {
            for b1 in 0..m2 {
                for a2 in 0..m1 {
                    for b2 in 0..m2 {
                        let prod = self.mul(a1, a2) * m2 + other.mul(b1, b2);
                        mul[a1 * m2 + b1][a2 * m2 + b2] = prod as u16;
                    }
                }
            }
        }
        GroupSpec {
            mul,
            identity: self.identity * m2 + other.identity,
            subgroups: Vec::new(),
        }
    }

    /// Smallest subgroup containing the generators.
    pub fn closure(&self, generators: &[usize]) -> Vec<usize> {
        let m = self.order();
        let mut member = vec![false; m];
        member[self.identity] = true;
        let mut frontier = vec![self.identity];
        for &g in generators {
            if g < m && !member[g] {
                member[g] = true;
                frontier.push(g);
            }
        }
        while let Some(x) = frontier.pop() {
            let snapshot: Vec<usize> = (0..m).filter(|&y| member[y]).collect();
            for &y in &snapshot {
                for z in [self.mul(x, y), self.mul(y, x)] {
                    if !member[z] {
                        member[z] = true;
                        frontier.push(z);
                    }
                }
            }
        }
        (0..m).filter(|&x| member[x]).collect()
    }

    /// A random subgroup: the closure of one or two random elements.
    pub fn random_subgroup<R: Rng>(&self, rng: &mut R) -> Vec<usize> {
        let m = self.order();
        let gens: Vec<usize> = match rng.gen_range(0..3u8) {
            0 => vec![rng.gen_range(0..m)],
            1 => vec![rng.gen_range(0..m), rng.gen_range(0..m)],
            _ => vec![self.identity],
        };
        self.closure(&gens)
    }

    /// Order of `∩_{i∈α} G_i`, with the empty intersection being all of `G`.
    pub fn intersection_order(&self, alpha: crate::varset::VarSet) -> usize {
        let mut members: Option<Vec<usize>> = None;
        for i in alpha.indices() {
            let sub = &self.subgroups[i as usize - 1];
            members = Some(match members {
                None => sub.clone(),
                Some(cur) => cur
                    .into_iter()
                    .filter(|x| sub.binary_search(x).is_ok())
                    .collect(),
            });
        }
        members.map(|v| v.len()).unwrap_or_else(|| self.order())
    }

    /// The group-characterizable vector `h_α = log₂(|G|/|∩_{i∈α} G_i|)` over
    /// the designated subgroups.
    pub fn group_vector(&self) -> Result<EntropyVectorReal, ModelError> {
        let n = self.subgroups.len();
        if n == 0 {
            return Err(ModelError::InvalidGroup("no subgroups designated".into()));
        }
        let order = self.order() as f64;
        let vals: Vec<f64> = crate::varset::VarSet::all_nonempty(n as u8)
            .map(|alpha| (order / self.intersection_order(alpha) as f64).log2())
            .collect();
        EntropyVectorReal::new(n as u8, vals)
    }

    /// Text format: order `m` on the first line, then `m` rows of the
    /// multiplication table, then one line per subgroup listing its elements.
    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<(), ModelError> {
        writeln!(w, "{}", self.order())?;
        for row in &self.mul {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(w, "{}", cells.join(" "))?;
        }
        for sub in &self.subgroups {
            let cells: Vec<String> = sub.iter().map(|x| x.to_string()).collect();
            writeln!(w, "{}", cells.join(" "))?;
        }
        Ok(())
    }

    pub fn read_from<R: BufRead>(r: &mut R) -> Result<GroupSpec, ModelError> {
        let mut lines = r.lines();
        let mut next_line = || -> Result<String, ModelError> {
            loop {
                match lines.next() {
                    None => return Err(ModelError::Malformed("unexpected end of file".into())),
                    Some(line) => {
                        let line = line?;
                        let t = line.trim().to_string();
                        if !t.is_empty() && !t.starts_with('#') {
                            return Ok(t);
                        }
                    }
                }
            }
        };
        let m: usize = next_line()?
            .parse()
            .map_err(|_| ModelError::Malformed("bad group order".into()))?;
        let mut mul = Vec::with_capacity(m);
        for _ in 0..m {
            let row: Vec<u16> = next_line()?
                .split_whitespace()
                .map(|t| t.parse::<u16>())
                .collect::<Result<_, _>>()
                .map_err(|_| ModelError::Malformed("bad table entry".into()))?;
            mul.push(row);
        }
        let mut subgroups = Vec::new();
        loop {
            match next_line() {
                Err(_) => break,
                Ok(line) => {
                    let sub: Vec<usize> = line
                        .split_whitespace()
                        .map(|t| t.parse::<usize>())
                        .collect::<Result<_, _>>()
                        .map_err(|_| ModelError::Malformed("bad subgroup element".into()))?;
                    subgroups.push(sub);
                }
            }
        }
        GroupSpec::new(mul, subgroups)
    }
}

/// Decide `∑ c_α log₂(|G|/|G_{∩α}|) ≥ 0` exactly: clear the coefficient
/// denominators to integers and compare the resulting products of
/// subgroup-intersection orders in big-integer arithmetic.
pub fn verify_group_multiplicative(b: &LinForm, g: &GroupSpec) -> Result<bool, ModelError> {
    if (b.n() as usize) > g.subgroups().len() {
        return Err(ModelError::InvalidGroup(format!(
            "form needs {} subgroups, group designates {}",
            b.n(),
            g.subgroups().len()
        )));
    }
    let mut lcm = BigInt::one();
    for (_, c) in b.terms() {
        lcm = lcm.lcm(c.denom());
    }
    // value = Π (|G|/|G_α|)^{e_α} with integer exponents e_α = c_α·lcm;
    // the inequality holds exactly when value ≥ 1.
    let mut numer = BigInt::one();
    let mut denom = BigInt::one();
    for (alpha, c) in b.terms() {
        let e = (c * Rat::from_integer(lcm.clone())).to_integer();
        let ratio_n = BigInt::from(g.order());
        let ratio_d = BigInt::from(g.intersection_order(alpha));
        let exp = e
            .abs()
            .to_u32()
            .ok_or_else(|| ModelError::InvalidGroup("exponent out of range".into()))?;
        if e.is_positive() {
            numer *= ratio_n.pow(exp);
            denom *= ratio_d.pow(exp);
        } else if e.is_negative() {
            numer *= ratio_d.pow(exp);
            denom *= ratio_n.pow(exp);
        }
    }
    Ok(numer >= denom)
}

/// All permutations of `0..k` in lexicographic order.
fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    let mut used = vec![false; k];
    build_permutations(k, &mut current, &mut used, &mut out);
    out
}

fn build_permutations(
    k: usize,
    current: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() == k {
        out.push(current.clone());
        return;
    }
    for i in 0..k {
        if !used[i] {
            used[i] = true;
            current.push(i);
            build_permutations(k, current, used, out);
            current.pop();
            used[i] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::varset::VarSet;

    fn vs(indices: &[u8]) -> VarSet {
        VarSet::from_indices(indices).unwrap()
    }

    #[test]
    fn klein_four_with_axis_subgroups() {
        // Z2 × Z2 with G1 = <(1,0)>, G2 = <(0,1)>
        let g = GroupSpec::cyclic(2).direct_product(&GroupSpec::cyclic(2));
        let g1 = g.closure(&[2]); // (1,0) has index 1*2+0 = 2
        let g2 = g.closure(&[1]); // (0,1) has index 0*2+1 = 1
        let g = g.with_subgroups(vec![g1, g2]).unwrap();
        let h = g.group_vector().unwrap();
        assert_eq!(h.as_slice(), &[1.0, 1.0, 2.0]);
    }

    #[test]
    fn whole_group_as_subgroup_has_zero_entropy() {
        let g = GroupSpec::cyclic(6);
        let all = g.closure(&[1]);
        let g = g.with_subgroups(vec![all]).unwrap();
        assert_eq!(g.group_vector().unwrap().as_slice(), &[0.0]);
    }

    #[test]
    fn s3_with_a3_and_a_transposition() {
        let g = GroupSpec::symmetric(3);
        assert_eq!(g.order(), 6);
        // A3: closure of a 3-cycle; find one by order
        let three_cycle = (0..6)
            .find(|&x| g.closure(&[x]).len() == 3)
            .expect("3-cycle exists");
        let transposition = (0..6)
            .find(|&x| g.closure(&[x]).len() == 2)
            .expect("transposition exists");
        let a3 = g.closure(&[three_cycle]);
        let t2 = g.closure(&[transposition]);
        let g = g.with_subgroups(vec![a3, t2]).unwrap();
        let h = g.group_vector().unwrap();
        assert!((h.get(vs(&[1])) - 1.0).abs() < 1e-12);
        assert!((h.get(vs(&[2])) - 3f64.log2()).abs() < 1e-12);
        assert!((h.get(vs(&[1, 2])) - 6f64.log2()).abs() < 1e-12);
    }

    #[test]
    fn mutual_information_group_form_is_the_order_inequality() {
        // I(1;2) ≥ 0 ⟺ |G||G1∩G2| ≥ |G1||G2|
        let g = GroupSpec::cyclic(2).direct_product(&GroupSpec::cyclic(2));
        let subs = vec![g.closure(&[2]), g.closure(&[1])];
        let g = g.with_subgroups(subs).unwrap();
        let b = LinForm::mutual(2, vs(&[1]), vs(&[2]), VarSet::EMPTY).unwrap();
        assert!(verify_group_multiplicative(&b, &g).unwrap());
    }

    #[test]
    fn conditional_mutual_information_holds_on_any_group() {
        let s4 = GroupSpec::symmetric(4);
        let subs = vec![
            s4.closure(&[1]),
            s4.closure(&[2, 3]),
            s4.closure(&[5]),
        ];
        let g = s4.with_subgroups(subs).unwrap();
        let b = LinForm::mutual(3, vs(&[1]), vs(&[2]), vs(&[3])).unwrap();
        assert!(verify_group_multiplicative(&b, &g).unwrap());
    }

    #[test]
    fn group_vectors_satisfy_elemental_rows() {
        let s4 = GroupSpec::symmetric(4);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        use rand_chacha::rand_core::SeedableRng;
        for _ in 0..50 {
            let subs: Vec<Vec<usize>> = (0..3).map(|_| s4.random_subgroup(&mut rng)).collect();
            let g = s4.clone().with_subgroups(subs).unwrap();
            let h = g.group_vector().unwrap();
            for row in crate::cone::elemental(3).unwrap() {
                let v = row.form.evaluate(h.as_slice()).unwrap();
                assert!(v >= -1e-9, "{row} evaluates to {v}");
            }
        }
    }

    #[test]
    fn multiplicative_check_agrees_with_float_sign() {
        use rand_chacha::rand_core::SeedableRng;
        let s4 = GroupSpec::symmetric(4);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let forms: Vec<LinForm> = vec![
            LinForm::mutual(2, vs(&[1]), vs(&[2]), VarSet::EMPTY).unwrap(),
            &LinForm::entropy(2, vs(&[1])).unwrap() - &LinForm::entropy(2, vs(&[1, 2])).unwrap(),
            LinForm::cond_entropy(2, vs(&[1]), vs(&[2])).unwrap(),
        ];
        for _ in 0..40 {
            let subs: Vec<Vec<usize>> = (0..2).map(|_| s4.random_subgroup(&mut rng)).collect();
            let g = s4.clone().with_subgroups(subs).unwrap();
            let h = g.group_vector().unwrap();
            for b in &forms {
                let exact = verify_group_multiplicative(b, &g).unwrap();
                let float = b.evaluate(h.as_slice()).unwrap();
                assert_eq!(exact, float >= -1e-9, "form {b} float {float}");
            }
        }
    }

    #[test]
    fn validation_rejects_bad_subgroups() {
        let g = GroupSpec::cyclic(4);
        // {0, 1} is not closed in Z4
        assert!(g.clone().with_subgroups(vec![vec![0, 1]]).is_err());
        // missing identity
        assert!(g.clone().with_subgroups(vec![vec![2]]).is_err());
        // fine: {0, 2}
        assert!(g.with_subgroups(vec![vec![0, 2]]).is_ok());
    }

    #[test]
    fn validation_rejects_broken_tables() {
        // 2×2 table that is not a group (no identity)
        assert!(GroupSpec::new(vec![vec![1, 1], vec![1, 1]], vec![]).is_err());
        // non-associative latin square of order 5 (constructed by swapping
        // two entries of Z5's table breaks associativity or inverses)
        let mut mul: Vec<Vec<u16>> = (0..5)
            .map(|a| (0..5).map(|b| ((a + b) % 5) as u16).collect())
            .collect();
        mul[2][3] = 1;
        mul[2][4] = 0;
        assert!(GroupSpec::new(mul, vec![]).is_err());
    }

    #[test]
    fn file_round_trip() {
        let g = GroupSpec::dihedral(4);
        let subs = vec![g.closure(&[1]), g.closure(&[4])];
        let g = g.with_subgroups(subs).unwrap();
        let mut buf = Vec::new();
        g.write_to(&mut buf).unwrap();
        let h = GroupSpec::read_from(&mut buf.as_slice()).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn symmetric_group_orders() {
        assert_eq!(GroupSpec::symmetric(3).order(), 6);
        assert_eq!(GroupSpec::symmetric(4).order(), 24);
        assert_eq!(GroupSpec::symmetric(5).order(), 120);
        assert_eq!(GroupSpec::dihedral(4).order(), 8);
    }

    #[test]
    fn constructed_groups_pass_full_validation() {
        // run the table constructors back through the validating entry point
        for g in [
            GroupSpec::symmetric(4),
            GroupSpec::dihedral(6),
            GroupSpec::cyclic(9),
            GroupSpec::cyclic(3).direct_product(&GroupSpec::dihedral(2)),
        ] {
            let mul = (0..g.order())
                .map(|a| (0..g.order()).map(|b| g.mul(a, b) as u16).collect())
                .collect();
            GroupSpec::new(mul, vec![]).expect("constructor output is a group");
        }
    }
}
