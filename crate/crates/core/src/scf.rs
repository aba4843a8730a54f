//! Social choice function tables and strategy-proofness checks.
//!
//! A function is stored as a dense table over the canonical profile
//! enumeration of a [`ProfileSpace`]. A coalition manipulates a profile when
//! a joint misreport by exactly its members makes every member strictly
//! better off under their true orders; a function is coalitionally
//! strategy-proof (CSP) when no profile admits a manipulating coalition.
//! Witness scans run in a fixed order (profiles ascending, coalitions by
//! size then mask, misreports in enumeration order) so reported witnesses
//! are deterministic.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::orders::{Alternative, PairOrder, WeakOrder};
use crate::profiles::{
    self, format_profile_inline, indifference_set, parse_profile_inline_at, supporters, Profile,
    ProfileSpace, Voter, VoterSet,
};

/// A total two-or-more-valued function table over a profile space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScfTable {
    space: Arc<ProfileSpace>,
    values: Vec<Alternative>,
}

impl ScfTable {
    pub fn new(space: Arc<ProfileSpace>, values: Vec<Alternative>) -> Result<Self> {
        if values.len() != space.num_profiles() {
            return Err(Error::domain(format!(
                "table has {} entries for {} profiles",
                values.len(),
                space.num_profiles()
            )));
        }
        for &x in &values {
            if !space.universe().contains(x) {
                return Err(Error::domain(format!("value id {} outside universe", x.0)));
            }
        }
        Ok(Self { space, values })
    }

    pub fn from_fn(space: Arc<ProfileSpace>, f: impl Fn(&Profile) -> Alternative) -> Result<Self> {
        let values = space.profiles().map(|p| f(&p)).collect();
        Self::new(space, values)
    }

    pub fn space(&self) -> &ProfileSpace {
        &self.space
    }

    pub fn space_arc(&self) -> Arc<ProfileSpace> {
        Arc::clone(&self.space)
    }

    pub fn value(&self, index: usize) -> Alternative {
        self.values[index]
    }

    pub fn value_of(&self, p: &Profile) -> Result<Alternative> {
        Ok(self.values[self.space.index_of(p)?])
    }

    pub fn values(&self) -> &[Alternative] {
        &self.values
    }

    /// Attained values, sorted by id.
    pub fn range(&self) -> Vec<Alternative> {
        let mut seen = vec![false; self.space.num_alternatives()];
        for &x in &self.values {
            seen[x.index()] = true;
        }
        (0..seen.len())
            .filter(|&i| seen[i])
            .map(|i| Alternative(i as u8))
            .collect()
    }

    /// The two attained values, or a domain error if the range is not a pair.
    pub fn range_pair(&self) -> Result<(Alternative, Alternative)> {
        match self.range().as_slice() {
            [a, b] => Ok((*a, *b)),
            other => Err(Error::domain(format!(
                "range has {} values, expected exactly two",
                other.len()
            ))),
        }
    }

    /// Two-voter, three-alternative fixture: `b` wins exactly when the first
    /// voter ranks `b` strictly over `a`, or ranks `c` strictly over the tied
    /// pair, or ranks the tied pair strictly over `c` while the second voter
    /// ranks `b` over `a`; otherwise `a` wins. Strategy-proof even though the
    /// outcome turns on preferences over the third alternative.
    pub fn iia_counterexample() -> ScfTable {
        let space = Arc::new(ProfileSpace::with_default_labels(2, 3).expect("fixture scale"));
        let (a, b, c) = (Alternative(0), Alternative(1), Alternative(2));
        ScfTable::from_fn(space, |p| {
            let first = p.order(Voter(0));
            let second = p.order(Voter(1));
            let b_wins = first.compare(b, a).unwrap() == PairOrder::Above
                || (first.compare(c, a).unwrap() == PairOrder::Above
                    && first.compare(a, b).unwrap() == PairOrder::Tied)
                || (first.compare(a, b).unwrap() == PairOrder::Tied
                    && first.compare(b, c).unwrap() == PairOrder::Above
                    && second.compare(b, a).unwrap() == PairOrder::Above);
            if b_wins {
                b
            } else {
                a
            }
        })
        .expect("fixture table")
    }
}

/// A manipulation instance: the true profile, the deviating coalition, and
/// the misreported profile (indices into the table's enumeration).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CspWitness {
    pub profile: usize,
    pub coalition: VoterSet,
    pub misreport: usize,
}

/// Nonempty coalitions ordered by size, then by mask.
pub(crate) fn coalitions_in_scan_order(num_voters: usize) -> Vec<VoterSet> {
    let mut masks: Vec<u32> = (1..(1u32 << num_voters)).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    masks.into_iter().map(VoterSet::from_mask).collect()
}

/// A table domain whose profiles draw each voter's order from one list of
/// canonical ranks; covers the full space and the strict-order subdomain.
pub(crate) struct OrderDomain<'a> {
    pub space: &'a ProfileSpace,
    pub allowed: Vec<usize>,
}

impl<'a> OrderDomain<'a> {
    pub fn full(space: &'a ProfileSpace) -> Self {
        Self {
            space,
            allowed: (0..space.num_orders()).collect(),
        }
    }

    pub fn num_profiles(&self) -> usize {
        self.allowed.len().pow(self.space.num_voters() as u32)
    }

    pub fn digits(&self, index: usize) -> Vec<usize> {
        let m = self.allowed.len();
        let nv = self.space.num_voters();
        let mut digits = vec![0usize; nv];
        let mut rest = index;
        for v in (0..nv).rev() {
            digits[v] = rest % m;
            rest /= m;
        }
        digits
    }

    pub fn index(&self, digits: &[usize]) -> usize {
        digits
            .iter()
            .fold(0, |acc, &d| acc * self.allowed.len() + d)
    }

    pub fn order_at(&self, digit: usize) -> &WeakOrder {
        &self.space.orders()[self.allowed[digit]]
    }

    pub fn profile(&self, index: usize) -> Profile {
        Profile::new(
            self.digits(index)
                .into_iter()
                .map(|d| self.order_at(d).clone())
                .collect(),
        )
        .expect("domain profiles are valid")
    }

    pub fn digits_of(&self, p: &Profile) -> Result<Vec<usize>> {
        let mut digits = Vec::with_capacity(p.num_voters());
        for w in p.orders() {
            let rank = self
                .space
                .order_rank(w)
                .and_then(|r| self.allowed.iter().position(|&a| a == r))
                .ok_or_else(|| Error::domain("order outside the table's domain"))?;
            digits.push(rank);
        }
        Ok(digits)
    }

    /// First manipulation in scan order, over all profiles and coalitions.
    pub fn manipulation_witness(
        &self,
        values: &[Alternative],
        singletons_only: bool,
    ) -> Option<CspWitness> {
        let nv = self.space.num_voters();
        let coalitions: Vec<VoterSet> = coalitions_in_scan_order(nv)
            .into_iter()
            .filter(|c| !singletons_only || c.len() == 1)
            .collect();
        for p_idx in 0..self.num_profiles() {
            let digits = self.digits(p_idx);
            for &coalition in &coalitions {
                if let Some(q_idx) = self.coalition_gain(values, &digits, values[p_idx], coalition)
                {
                    return Some(CspWitness {
                        profile: p_idx,
                        coalition,
                        misreport: q_idx,
                    });
                }
            }
        }
        None
    }

    /// First joint misreport by `coalition` that strictly improves the
    /// outcome for every member, under the true orders in `digits`.
    pub fn coalition_gain(
        &self,
        values: &[Alternative],
        digits: &[usize],
        current: Alternative,
        coalition: VoterSet,
    ) -> Option<usize> {
        let members: Vec<usize> = coalition.voters().map(|v| v.index()).collect();
        let m = self.allowed.len();
        let mut patched = digits.to_vec();
        let mut counter = vec![0usize; members.len()];
        loop {
            for (i, &v) in members.iter().enumerate() {
                patched[v] = counter[i];
            }
            let q_idx = self.index(&patched);
            let outcome = values[q_idx];
            if outcome != current {
                let all_gain = members.iter().all(|&v| {
                    self.order_at(digits[v]).compare(outcome, current).unwrap() == PairOrder::Above
                });
                if all_gain {
                    return Some(q_idx);
                }
            }
            let mut pos = members.len();
            loop {
                if pos == 0 {
                    return None;
                }
                pos -= 1;
                if counter[pos] + 1 < m {
                    counter[pos] += 1;
                    for c in &mut counter[pos + 1..] {
                        *c = 0;
                    }
                    break;
                }
            }
        }
    }
}

/// First profitable joint misreport for the given coalition at `p`, if any.
pub fn coalition_manipulates(
    f: &ScfTable,
    p: &Profile,
    coalition: VoterSet,
) -> Result<Option<Profile>> {
    if coalition.is_empty() {
        return Err(Error::domain("coalition must be nonempty"));
    }
    if !coalition.is_subset_of(f.space().full_set()) {
        return Err(Error::domain("coalition outside the society"));
    }
    let dom = OrderDomain::full(f.space());
    let digits = dom.digits_of(p)?;
    let current = f.value(dom.index(&digits));
    Ok(dom
        .coalition_gain(&f.values, &digits, current, coalition)
        .map(|q_idx| dom.profile(q_idx)))
}

/// First manipulation over all profiles and nonempty coalitions.
pub fn csp_witness(f: &ScfTable) -> Option<CspWitness> {
    OrderDomain::full(f.space()).manipulation_witness(&f.values, false)
}

pub fn is_csp(f: &ScfTable) -> bool {
    csp_witness(f).is_none()
}

/// Like [`csp_witness`] restricted to single-voter coalitions.
pub fn individual_witness(f: &ScfTable) -> Option<CspWitness> {
    OrderDomain::full(f.space()).manipulation_witness(&f.values, true)
}

pub fn is_individually_sp(f: &ScfTable) -> bool {
    individual_witness(f).is_none()
}

/// No attained value is strictly preferred to the outcome by every voter.
pub fn is_weak_pareto(f: &ScfTable) -> bool {
    let range = f.range();
    for (idx, p) in f.space().profiles().enumerate() {
        let chosen = f.value(idx);
        for &y in &range {
            if y == chosen {
                continue;
            }
            let beaten = (0..p.num_voters())
                .all(|v| p.order(Voter(v as u8)).compare(y, chosen).unwrap() == PairOrder::Above);
            if beaten {
                return false;
            }
        }
    }
    true
}

/// The two inclusion-based comparison conditions between profiles. `B2`
/// applied to `(P, Q)` equals `B1` applied to `(Q, P)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BCondition {
    B1,
    B2,
}

/// `B1(P,Q)`: voters tied in both profiles report identically, the
/// supporters of `a` do not shrink from `P` to `Q`, and the supporters of
/// `b` do not grow.
pub fn b_condition(
    p: &Profile,
    q: &Profile,
    a: Alternative,
    b: Alternative,
    which: BCondition,
) -> Result<bool> {
    let (p, q) = match which {
        BCondition::B1 => (p, q),
        BCondition::B2 => (q, p),
    };
    let tied_both = indifference_set(p, a, b)?.intersection(indifference_set(q, a, b)?);
    for v in tied_both.voters() {
        if p.order(v) != q.order(v) {
            return Ok(false);
        }
    }
    Ok(supporters(a, p, b)?.is_subset_of(supporters(a, q, b)?)
        && supporters(b, q, a)?.is_subset_of(supporters(b, p, a)?))
}

/// First ordered pair violating the pairwise monotonicity conditions: `B1`
/// with outcome `a` must preserve `a`, and `B2` with outcome `b` must
/// preserve `b`.
pub fn essential_witness(
    f: &ScfTable,
    a: Alternative,
    b: Alternative,
) -> Result<Option<(usize, usize, BCondition)>> {
    check_pair_range(f, a, b)?;
    let n = f.space().num_profiles();
    let profiles: Vec<Profile> = f.space().profiles().collect();
    for p_idx in 0..n {
        for q_idx in 0..n {
            let (p, q) = (&profiles[p_idx], &profiles[q_idx]);
            if f.value(p_idx) == a
                && f.value(q_idx) != a
                && b_condition(p, q, a, b, BCondition::B1)?
            {
                return Ok(Some((p_idx, q_idx, BCondition::B1)));
            }
            if f.value(p_idx) == b
                && f.value(q_idx) != b
                && b_condition(p, q, a, b, BCondition::B2)?
            {
                return Ok(Some((p_idx, q_idx, BCondition::B2)));
            }
        }
    }
    Ok(None)
}

pub fn is_essentially_based_and_monotonic(
    f: &ScfTable,
    a: Alternative,
    b: Alternative,
) -> Result<bool> {
    Ok(essential_witness(f, a, b)?.is_none())
}

/// Oracle variant: the outcome depends only on the pairwise restriction
/// data. Tied voters must report identically and both supporter sets must
/// match exactly for the premise to fire.
pub fn is_essentially_ab_based(f: &ScfTable, a: Alternative, b: Alternative) -> Result<bool> {
    check_pair_range(f, a, b)?;
    let profiles: Vec<Profile> = f.space().profiles().collect();
    for (p_idx, p) in profiles.iter().enumerate() {
        'q: for (q_idx, q) in profiles.iter().enumerate() {
            if f.value(p_idx) == f.value(q_idx) {
                continue;
            }
            if supporters(a, p, b)? != supporters(a, q, b)?
                || supporters(b, p, a)? != supporters(b, q, a)?
            {
                continue;
            }
            for v in indifference_set(p, a, b)?.voters() {
                if p.order(v) != q.order(v) {
                    continue 'q;
                }
            }
            return Ok(false);
        }
    }
    Ok(true)
}

/// Oracle variant: monotonicity under strict inclusion moves. Requires at
/// least one supporter-set inclusion to be proper, unlike the conditions
/// checked by [`is_essentially_based_and_monotonic`].
pub fn is_ab_monotonic_strict(f: &ScfTable, a: Alternative, b: Alternative) -> Result<bool> {
    check_pair_range(f, a, b)?;
    let profiles: Vec<Profile> = f.space().profiles().collect();
    for (p_idx, p) in profiles.iter().enumerate() {
        'q: for (q_idx, q) in profiles.iter().enumerate() {
            let fp = f.value(p_idx);
            let fq = f.value(q_idx);
            if fp == fq {
                continue;
            }
            let da_p = supporters(a, p, b)?;
            let da_q = supporters(a, q, b)?;
            let db_p = supporters(b, p, a)?;
            let db_q = supporters(b, q, a)?;
            let toward_a = fp == a
                && da_p.is_subset_of(da_q)
                && db_q.is_subset_of(db_p)
                && (da_p != da_q || db_q != db_p);
            let toward_b = fp == b
                && db_p.is_subset_of(db_q)
                && da_q.is_subset_of(da_p)
                && (db_p != db_q || da_q != da_p);
            if !toward_a && !toward_b {
                continue;
            }
            let tied_both = indifference_set(p, a, b)?.intersection(indifference_set(q, a, b)?);
            for v in tied_both.voters() {
                if p.order(v) != q.order(v) {
                    continue 'q;
                }
            }
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn check_pair_range(f: &ScfTable, a: Alternative, b: Alternative) -> Result<()> {
    if a == b {
        return Err(Error::domain("pair must be two distinct alternatives"));
    }
    let mut range = f.range();
    range.sort();
    let mut pair = [a, b];
    pair.sort();
    if range != pair {
        return Err(Error::domain(format!(
            "table range has {} values and must be exactly the given pair",
            range.len()
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Textual format.

/// Renders the full table: headers, then one `P#k: profile -> value` line
/// per profile in enumeration order.
pub fn format_scf_file(f: &ScfTable) -> String {
    let space = f.space();
    let mut out = String::new();
    out.push_str(&profiles::format_universe_line(space.universe()));
    out.push('\n');
    out.push_str(&profiles::format_society_line(space.society()));
    out.push('\n');
    for (idx, p) in space.profiles().enumerate() {
        out.push_str(&format!(
            "P#{idx}: {} -> {}\n",
            format_profile_inline(&p, space),
            space.universe().label(f.value(idx))
        ));
    }
    out
}

pub fn parse_scf_file(text: &str) -> Result<ScfTable> {
    let mut lines = text.lines().enumerate();
    let (ln, first) = profiles::next_content_line(&mut lines)
        .ok_or_else(|| Error::parse(1, 1, "missing 'universe:' header"))?;
    let universe = profiles::parse_universe_line(first, ln)?;
    let (ln, second) = profiles::next_content_line(&mut lines)
        .ok_or_else(|| Error::parse(ln + 1, 1, "missing 'society:' header"))?;
    let society = profiles::parse_society_line(second, ln)?;
    let space = Arc::new(
        ProfileSpace::new(universe, society).map_err(|e| Error::parse(ln, 1, e.to_string()))?,
    );

    let mut values = Vec::with_capacity(space.num_profiles());
    let mut last_line = ln;
    for expected in 0..space.num_profiles() {
        let Some((ln, text)) = profiles::next_content_line(&mut lines) else {
            return Err(Error::parse(
                last_line,
                1,
                format!(
                    "table lists {expected} profiles, expected {}",
                    space.num_profiles()
                ),
            ));
        };
        last_line = ln;
        let (value, index) = parse_scf_line(text, ln, expected, &space)?;
        debug_assert_eq!(index, expected);
        values.push(value);
    }
    if let Some((ln, _)) = profiles::next_content_line(&mut lines) {
        return Err(Error::parse(
            ln,
            1,
            "trailing content after the last profile",
        ));
    }
    ScfTable::new(space, values).map_err(|e| Error::parse(last_line, 1, e.to_string()))
}

fn parse_scf_line(
    text: &str,
    line: usize,
    expected: usize,
    space: &Arc<ProfileSpace>,
) -> Result<(Alternative, usize)> {
    let body = text.trim_start();
    let indent = text.len() - body.len();
    let rest = body
        .strip_prefix("P#")
        .ok_or_else(|| Error::parse(line, indent + 1, "expected 'P#<k>:'"))?;
    let colon = rest
        .find(':')
        .ok_or_else(|| Error::parse(line, indent + 1, "expected ':' after the profile number"))?;
    let k: usize = rest[..colon]
        .trim()
        .parse()
        .map_err(|_| Error::parse(line, indent + 3, "profile number is not an integer"))?;
    if k != expected {
        return Err(Error::parse(
            line,
            indent + 3,
            format!("profile number {k} out of order, expected {expected}"),
        ));
    }
    let payload = &rest[colon + 1..];
    let arrow = payload
        .rfind(" -> ")
        .ok_or_else(|| Error::parse(line, indent + 1, "expected ' -> <value>'"))?;
    let profile_col = indent + 2 + colon + 2;
    let p = parse_profile_inline_at(&payload[..arrow], line, profile_col, space)?;
    let index = space
        .index_of(&p)
        .map_err(|e| Error::parse(line, profile_col, e.to_string()))?;
    if index != expected {
        return Err(Error::parse(
            line,
            profile_col,
            format!(
                "profile on line {line} is #{index} in enumeration order, expected #{expected}"
            ),
        ));
    }
    let label = payload[arrow + 4..].trim();
    let value = space
        .universe()
        .find(label)
        .ok_or_else(|| Error::parse(line, profile_col, format!("unknown value '{label}'")))?;
    Ok((value, index))
}

/// Human-readable rendering of a witness triple.
pub fn format_csp_witness(f: &ScfTable, w: &CspWitness) -> String {
    let space = f.space();
    format!(
        "profile P#{}: {}\ncoalition: {}\nmisreport P#{}: {}\noutcome {} -> {}",
        w.profile,
        format_profile_inline(&space.profile(w.profile), space),
        profiles::format_voter_set(w.coalition, space.society()),
        w.misreport,
        format_profile_inline(&space.profile(w.misreport), space),
        space.universe().label(f.value(w.profile)),
        space.universe().label(f.value(w.misreport)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orders::parse_order;

    const A: Alternative = Alternative(0);
    const B: Alternative = Alternative(1);

    fn space(nv: usize, na: usize) -> Arc<ProfileSpace> {
        Arc::new(ProfileSpace::with_default_labels(nv, na).unwrap())
    }

    fn profile(space: &ProfileSpace, texts: &[&str]) -> Profile {
        Profile::new(
            texts
                .iter()
                .map(|t| parse_order(t, space.universe()).unwrap())
                .collect(),
        )
        .unwrap()
    }

    /// One voter, two alternatives, outcomes indexed by order rank
    /// (a~b, a>b, b>a).
    fn one_voter_table(values: [Alternative; 3]) -> ScfTable {
        ScfTable::new(space(1, 2), values.to_vec()).unwrap()
    }

    /// Rewards the opposite of the reported strict preference.
    fn anti_rule() -> ScfTable {
        one_voter_table([A, B, A])
    }

    /// First voter's strict preference decides; ties go to `a`.
    fn first_voter_dictator(nv: usize) -> ScfTable {
        let s = space(nv, 2);
        ScfTable::from_fn(s, |p| match p.order(Voter(0)).compare(A, B).unwrap() {
            PairOrder::Below => B,
            _ => A,
        })
        .unwrap()
    }

    #[test]
    fn range_examples() {
        let fixture = ScfTable::iia_counterexample();
        assert_eq!(fixture.range(), vec![A, B]);
        assert_eq!(fixture.range_pair().unwrap(), (A, B));

        let constant = ScfTable::new(space(1, 2), vec![A, A, A]).unwrap();
        assert_eq!(constant.range(), vec![A]);
        assert!(constant.range_pair().is_err());

        let dictator = first_voter_dictator(2);
        assert_eq!(dictator.range(), vec![A, B]);
    }

    #[test]
    fn fixture_values_on_named_profiles() {
        let f = ScfTable::iia_counterexample();
        let s = f.space();
        for (orders, expected) in [
            (["a~b>c", "a~b>c"], A),
            (["a~b>c", "a>b>c"], A),
            (["c>a~b", "c>a~b"], B),
            (["c>a~b", "a>b>c"], B),
            (["a~b>c", "b>a>c"], B),
            (["b>a>c", "a>b>c"], B),
            (["a~b~c", "b>a>c"], A),
        ] {
            let p = profile(s, &orders);
            assert_eq!(f.value_of(&p).unwrap(), expected, "at {orders:?}");
        }
    }

    #[test]
    fn anti_rule_has_deterministic_witness() {
        let f = anti_rule();
        let w = csp_witness(&f).expect("manipulable");
        // First manipulable profile is a>b (rank 1); the first profitable
        // misreport in enumeration order is the tie.
        assert_eq!(w.profile, 1);
        assert_eq!(w.coalition, VoterSet::from_mask(0b1));
        assert_eq!(w.misreport, 0);
        assert!(!is_csp(&f));
        assert_eq!(individual_witness(&f), Some(w));

        let p = f.space().profile(1);
        let q = coalition_manipulates(&f, &p, VoterSet::from_mask(0b1))
            .unwrap()
            .expect("gain exists");
        assert_eq!(q, f.space().profile(0));
    }

    #[test]
    fn dictator_and_fixture_are_strategy_proof() {
        let dictator = first_voter_dictator(2);
        assert!(is_csp(&dictator));
        for p in dictator.space().profiles() {
            for coalition in coalitions_in_scan_order(2) {
                assert!(coalition_manipulates(&dictator, &p, coalition)
                    .unwrap()
                    .is_none());
            }
        }
        assert!(is_csp(&ScfTable::iia_counterexample()));
    }

    #[test]
    fn coalition_argument_validation() {
        let f = anti_rule();
        let p = f.space().profile(0);
        assert!(matches!(
            coalition_manipulates(&f, &p, VoterSet::empty()),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            coalition_manipulates(&f, &p, VoterSet::from_mask(0b10)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn individual_and_coalitional_coincide_exhaustively() {
        // Every onto two-valued table at two voters, two alternatives.
        let s = space(2, 2);
        let n = s.num_profiles();
        for pick in 0u32..(1 << n) {
            let values: Vec<Alternative> = (0..n)
                .map(|i| if pick & (1 << i) != 0 { B } else { A })
                .collect();
            if !values.contains(&A) || !values.contains(&B) {
                continue;
            }
            let f = ScfTable::new(Arc::clone(&s), values).unwrap();
            assert_eq!(is_csp(&f), is_individually_sp(&f));
        }
    }

    #[test]
    fn weak_pareto_examples() {
        assert!(is_weak_pareto(&first_voter_dictator(2)));
        assert!(is_weak_pareto(&ScfTable::iia_counterexample()));
        // The anti rule picks b when its lone voter strictly prefers a.
        assert!(!is_weak_pareto(&anti_rule()));
    }

    #[test]
    fn b_condition_cases() {
        let s = space(1, 2);
        let p = profile(&s, &["a>b"]);
        let q = profile(&s, &["b>a"]);
        assert!(b_condition(&p, &p, A, B, BCondition::B1).unwrap());
        // Supporters of a shrink from p to q.
        assert!(!b_condition(&p, &q, A, B, BCondition::B1).unwrap());
        assert!(b_condition(&q, &p, A, B, BCondition::B1).unwrap());
        // B2 swaps the roles.
        for x in s.profiles() {
            for y in s.profiles() {
                assert_eq!(
                    b_condition(&x, &y, A, B, BCondition::B2).unwrap(),
                    b_condition(&y, &x, A, B, BCondition::B1).unwrap()
                );
            }
        }
        // Tied voters changing their order off the pair break the premise.
        let s3 = space(1, 3);
        let x = profile(&s3, &["a~b>c"]);
        let y = profile(&s3, &["c>a~b"]);
        assert!(!b_condition(&x, &y, A, B, BCondition::B1).unwrap());
    }

    #[test]
    fn essential_condition_examples() {
        let fixture = ScfTable::iia_counterexample();
        assert!(is_essentially_based_and_monotonic(&fixture, A, B).unwrap());
        assert!(essential_witness(&anti_rule(), A, B).unwrap().is_some());
        let constant = ScfTable::new(space(1, 2), vec![A, A, A]).unwrap();
        assert!(matches!(
            is_essentially_based_and_monotonic(&constant, A, B),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn either_condition_implies_the_other() {
        // Violations always come in pairs: scan all onto tables and check
        // that the first violation's mirror is also found.
        let s = space(1, 2);
        for pick in 0u32..(1 << 3) {
            let values: Vec<Alternative> = (0..3)
                .map(|i| if pick & (1 << i) != 0 { B } else { A })
                .collect();
            if !values.contains(&A) || !values.contains(&B) {
                continue;
            }
            let f = ScfTable::new(Arc::clone(&s), values).unwrap();
            let b1_holds = holds_one_condition(&f, BCondition::B1);
            let b2_holds = holds_one_condition(&f, BCondition::B2);
            assert_eq!(b1_holds, b2_holds, "table {pick:b}");
        }
    }

    fn holds_one_condition(f: &ScfTable, which: BCondition) -> bool {
        let target = match which {
            BCondition::B1 => A,
            BCondition::B2 => B,
        };
        let profiles: Vec<Profile> = f.space().profiles().collect();
        for (p_idx, p) in profiles.iter().enumerate() {
            for (q_idx, q) in profiles.iter().enumerate() {
                if f.value(p_idx) == target
                    && f.value(q_idx) != target
                    && b_condition(p, q, A, B, which).unwrap()
                {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn strict_variant_oracle_matches_weak_conditions() {
        // The based-plus-strict-monotonic pair and the inclusion conditions
        // accept exactly the same tables.
        for (nv, na) in [(1usize, 2usize), (2, 2)] {
            let s = space(nv, na);
            let n = s.num_profiles();
            for pick in 0u32..(1 << n) {
                let values: Vec<Alternative> = (0..n)
                    .map(|i| if pick & (1 << i) != 0 { B } else { A })
                    .collect();
                if !values.contains(&A) || !values.contains(&B) {
                    continue;
                }
                let f = ScfTable::new(Arc::clone(&s), values).unwrap();
                let weak = is_essentially_based_and_monotonic(&f, A, B).unwrap();
                let oracle = is_essentially_ab_based(&f, A, B).unwrap()
                    && is_ab_monotonic_strict(&f, A, B).unwrap();
                assert_eq!(weak, oracle, "table {pick:b} at ({nv},{na})");
            }
        }
    }

    #[test]
    fn scf_file_roundtrip() {
        let f = ScfTable::iia_counterexample();
        let text = format_scf_file(&f);
        let parsed = parse_scf_file(&text).unwrap();
        assert_eq!(parsed, f);
        assert!(
            text.starts_with("universe: a b c\nsociety: v0 v1\nP#0: v0: a~b~c; v1: a~b~c -> a\n")
        );
    }

    #[test]
    fn scf_file_errors() {
        // Truncated table.
        let f = anti_rule();
        let text = format_scf_file(&f);
        let truncated: String = text.lines().take(4).map(|l| format!("{l}\n")).collect();
        assert!(matches!(
            parse_scf_file(&truncated),
            Err(Error::Parse { .. })
        ));

        // Out-of-order numbering.
        let swapped = text.replace("P#1:", "P#9:");
        match parse_scf_file(&swapped) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("expected parse error, got {other:?}"),
        }

        // Profile text inconsistent with its position.
        let broken = text.replace("P#1: v0: a>b", "P#1: v0: b>a");
        assert!(matches!(parse_scf_file(&broken), Err(Error::Parse { .. })));

        // Unknown value label.
        let bad_value = text.replace("-> a\n", "-> z\n");
        assert!(matches!(
            parse_scf_file(&bad_value),
            Err(Error::Parse { .. })
        ));
    }
}
