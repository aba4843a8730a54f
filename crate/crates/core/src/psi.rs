//! Sequential two-valued rules built from extended committees, plus the
//! committee rules on the strict-order subdomain they generalize.
//!
//! A spec carries a pair `{a, b}`, a default value, and an ordered list of
//! extended committees. A profile is resolved by the first entry whose class
//! it falls into (`a`-side or `b`-side); if no entry claims it, the default
//! applies. Every function built this way is coalitionally strategy-proof,
//! and every coalitionally strategy-proof function with two-element range
//! arises this way (see the `decompose` module for the converse direction).

use std::sync::Arc;

use rand::Rng;

use crate::committees::{
    enumerate_committees, format_committee, parse_committee_at, Committee, ExtendedCommittee,
};
use crate::error::{Error, Result};
use crate::orders::{Alternative, PairOrder, Universe, WeakOrder};
use crate::profiles::{
    self, format_partial_inline, is_partial_ab_indifference, PartialProfile, Profile, ProfileSpace,
    Voter, VoterSet,
};
use crate::scf::{CspWitness, OrderDomain, ScfTable};

/// Position of a profile in the entry scan: the first entry that claims it,
/// or none at all.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntryIndex {
    Entry(usize),
    Infinity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiSpec {
    space: Arc<ProfileSpace>,
    a: Alternative,
    b: Alternative,
    default: Alternative,
    entries: Vec<ExtendedCommittee>,
}

impl PsiSpec {
    pub fn new(
        space: Arc<ProfileSpace>,
        a: Alternative,
        b: Alternative,
        default: Alternative,
        entries: Vec<ExtendedCommittee>,
    ) -> Result<Self> {
        let universe = space.universe();
        if !universe.contains(a) || !universe.contains(b) {
            return Err(Error::domain("pair must name alternatives in the universe"));
        }
        if a == b {
            return Err(Error::domain(
                "pair must consist of two distinct alternatives",
            ));
        }
        if default != a && default != b {
            return Err(Error::domain("default value must be one of the pair"));
        }
        if entries.is_empty() {
            return Err(Error::domain("at least one entry is required"));
        }
        for entry in &entries {
            if entry.pi().num_voters() != space.num_voters() {
                return Err(Error::domain("entry society size does not match the space"));
            }
            for (_, w) in entry.pi().entries() {
                if w.num_alternatives() != space.num_alternatives() {
                    return Err(Error::domain("frozen order does not match the universe"));
                }
            }
            if !is_partial_ab_indifference(entry.pi(), a, b)? {
                return Err(Error::domain(
                    "frozen orders must be indifferent on the pair",
                ));
            }
            let expected = entry.pi().domain().complement_within(space.num_voters());
            if entry.family().carrier() != expected {
                return Err(Error::domain(
                    "entry carrier must be the complement of its frozen voters",
                ));
            }
        }
        Ok(Self {
            space,
            a,
            b,
            default,
            entries,
        })
    }

    pub fn space(&self) -> &ProfileSpace {
        &self.space
    }

    pub fn space_arc(&self) -> Arc<ProfileSpace> {
        Arc::clone(&self.space)
    }

    pub fn pair(&self) -> (Alternative, Alternative) {
        (self.a, self.b)
    }

    pub fn default_value(&self) -> Alternative {
        self.default
    }

    pub fn entries(&self) -> &[ExtendedCommittee] {
        &self.entries
    }

    pub fn num_entries(&self) -> usize {
        self.entries.len()
    }

    fn check_profile(&self, p: &Profile) -> Result<()> {
        if p.num_voters() != self.space.num_voters()
            || p.num_alternatives() != self.space.num_alternatives()
        {
            return Err(Error::domain("profile does not match the spec's space"));
        }
        Ok(())
    }

    /// First entry whose `a`-side or `b`-side class contains `p`.
    pub fn index_of(&self, p: &Profile) -> Result<EntryIndex> {
        Ok(self.scan(p)?.0)
    }

    /// Value at `p`: the side of the claiming entry, or the default.
    pub fn evaluate(&self, p: &Profile) -> Result<Alternative> {
        Ok(self.scan(p)?.1)
    }

    /// Like [`Self::evaluate`], but also reports how many entries had their
    /// membership tested. The scan stops at the claiming entry, so the count
    /// is the entry's position plus one, or the entry total on fall-through.
    pub fn evaluate_traced(&self, p: &Profile) -> Result<(Alternative, usize)> {
        let (index, value) = self.scan(p)?;
        let consulted = match index {
            EntryIndex::Entry(k) => k + 1,
            EntryIndex::Infinity => self.entries.len(),
        };
        Ok((value, consulted))
    }

    fn scan(&self, p: &Profile) -> Result<(EntryIndex, Alternative)> {
        self.check_profile(p)?;
        for (k, entry) in self.entries.iter().enumerate() {
            // The two sides of one entry are disjoint, so the order of the
            // two membership tests does not matter.
            if entry.in_class(p, self.a, self.b, self.a)? {
                return Ok((EntryIndex::Entry(k), self.a));
            }
            if entry.in_class(p, self.a, self.b, self.b)? {
                return Ok((EntryIndex::Entry(k), self.b));
            }
        }
        Ok((EntryIndex::Infinity, self.default))
    }

    /// Evaluates every profile of the space into a table.
    pub fn to_table(&self) -> Result<ScfTable> {
        let mut values = Vec::with_capacity(self.space.num_profiles());
        for p in self.space.profiles() {
            values.push(self.evaluate(&p)?);
        }
        ScfTable::new(Arc::clone(&self.space), values)
    }
}

/// Shape of a single entry's family, which fixes the attainable values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    PowerSet,
    Empty,
    Proper,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeReport {
    pub kind: FamilyKind,
    /// The exact set of attained values, sorted by alternative id.
    pub range: Vec<Alternative>,
}

/// Range of a one-entry spec, read off the family shape without evaluating.
///
/// A power-set family leaves the `b`-side class empty: every profile either
/// resolves to `a` or falls through to the default. The default is reached
/// exactly when some voter is frozen (a frozen voter deviating to an order
/// that keeps the pair tied, or breaks it the wrong way, escapes the class);
/// with no frozen voters the function is constantly `a`. The empty family
/// mirrors this with `b`. When the family and its dual are both nonempty,
/// profiles with all voters strictly for one side land in that side's class,
/// so both values are attained and the range is exactly the pair.
pub fn range_report(spec: &PsiSpec) -> Result<RangeReport> {
    if spec.num_entries() != 1 {
        return Err(Error::domain("range report requires exactly one entry"));
    }
    let entry = &spec.entries()[0];
    let (a, b) = spec.pair();
    let (kind, primary) = if entry.family().is_power_set() {
        (FamilyKind::PowerSet, a)
    } else if entry.family().is_empty() {
        (FamilyKind::Empty, b)
    } else {
        (FamilyKind::Proper, a)
    };
    let mut range = vec![primary];
    match kind {
        FamilyKind::Proper => range.push(b),
        _ => {
            if !entry.pi().is_empty() && spec.default_value() != primary {
                range.push(spec.default_value());
            }
        }
    }
    range.sort_by_key(|x| x.index());
    Ok(RangeReport { kind, range })
}

/// Draws a spec uniformly: 1 to 4 entries, each frozen set a uniform subset
/// of the voters, each frozen order uniform among those tying the pair, each
/// family uniform among the superset closed families on the leftover voters.
pub fn random_spec<R: Rng>(space: &Arc<ProfileSpace>, rng: &mut R) -> Result<PsiSpec> {
    let na = space.num_alternatives();
    let nv = space.num_voters();
    if na < 2 {
        return Err(Error::domain("random spec needs at least two alternatives"));
    }
    let a = Alternative(rng.gen_range(0..na) as u8);
    let b = Alternative(((a.index() + 1 + rng.gen_range(0..na - 1)) % na) as u8);
    let default = if rng.gen_bool(0.5) { a } else { b };
    let tied: Vec<&WeakOrder> = space
        .orders()
        .iter()
        .filter(|w| w.compare(a, b).unwrap() == PairOrder::Tied)
        .collect();
    let beta = rng.gen_range(1..=4usize);
    let mut entries = Vec::with_capacity(beta);
    for _ in 0..beta {
        let domain = VoterSet::from_mask(rng.gen_range(0..(1u32 << nv)));
        let pi = PartialProfile::new(
            nv,
            domain
                .voters()
                .map(|v| (v, tied[rng.gen_range(0..tied.len())].clone()))
                .collect(),
        )?;
        let families = enumerate_committees(domain.complement_within(nv))?;
        let family = families[rng.gen_range(0..families.len())].clone();
        entries.push(ExtendedCommittee::new(pi, family, a, b)?);
    }
    PsiSpec::new(Arc::clone(space), a, b, default, entries)
}

/// A choice table over the strict-order subdomain, indexed in the induced
/// enumeration order (each voter's order drawn from the strict orders in
/// canonical rank order, first voter most significant).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictScf {
    space: Arc<ProfileSpace>,
    strict_ranks: Vec<usize>,
    values: Vec<Alternative>,
}

impl StrictScf {
    pub fn new(space: Arc<ProfileSpace>, values: Vec<Alternative>) -> Result<Self> {
        let strict_ranks = strict_ranks(&space);
        let expected = strict_ranks.len().pow(space.num_voters() as u32);
        if values.len() != expected {
            return Err(Error::domain(format!(
                "table has {} entries, the strict subdomain has {expected}",
                values.len()
            )));
        }
        if values.iter().any(|x| !space.universe().contains(*x)) {
            return Err(Error::domain("table value outside the universe"));
        }
        Ok(Self {
            space,
            strict_ranks,
            values,
        })
    }

    pub fn from_fn(
        space: Arc<ProfileSpace>,
        mut f: impl FnMut(&Profile) -> Alternative,
    ) -> Result<Self> {
        let strict_ranks = strict_ranks(&space);
        let count = strict_ranks.len().pow(space.num_voters() as u32);
        let values = {
            let dom = OrderDomain {
                space: &space,
                allowed: strict_ranks.clone(),
            };
            (0..count).map(|i| f(&dom.profile(i))).collect::<Vec<_>>()
        };
        Self::new(space, values)
    }

    fn domain(&self) -> OrderDomain<'_> {
        OrderDomain {
            space: &self.space,
            allowed: self.strict_ranks.clone(),
        }
    }

    pub fn space(&self) -> &ProfileSpace {
        &self.space
    }

    pub fn num_profiles(&self) -> usize {
        self.values.len()
    }

    pub fn profile(&self, index: usize) -> Profile {
        self.domain().profile(index)
    }

    pub fn index_of(&self, p: &Profile) -> Result<usize> {
        let digits = self.domain().digits_of(p)?;
        Ok(self.domain().index(&digits))
    }

    pub fn value(&self, index: usize) -> Alternative {
        self.values[index]
    }

    pub fn value_of(&self, p: &Profile) -> Result<Alternative> {
        Ok(self.values[self.index_of(p)?])
    }

    pub fn values(&self) -> &[Alternative] {
        &self.values
    }

    pub fn range(&self) -> Vec<Alternative> {
        let mut seen = vec![false; self.space.num_alternatives()];
        for x in &self.values {
            seen[x.index()] = true;
        }
        (0..seen.len())
            .filter(|&i| seen[i])
            .map(|i| Alternative(i as u8))
            .collect()
    }

    /// First manipulation where the true profile and the misreport are both
    /// strict; indices refer to the strict subdomain.
    pub fn csp_witness(&self) -> Option<CspWitness> {
        self.domain().manipulation_witness(&self.values, false)
    }

    pub fn is_csp(&self) -> bool {
        self.csp_witness().is_none()
    }
}

pub(crate) fn strict_ranks(space: &ProfileSpace) -> Vec<usize> {
    space
        .orders()
        .iter()
        .enumerate()
        .filter(|(_, w)| w.is_strict())
        .map(|(i, _)| i)
        .collect()
}

/// The committee rule on strict profiles: `a` when the supporters of `a`
/// against `b` form a member of `family`, otherwise `b`. Requires a family
/// that is nonempty and free of the empty coalition, so that both values are
/// attained and the rule is coalitionally strategy-proof.
pub fn strict_committee_scf(
    space: Arc<ProfileSpace>,
    family: &Committee,
    a: Alternative,
    b: Alternative,
) -> Result<StrictScf> {
    let universe = space.universe();
    if !universe.contains(a) || !universe.contains(b) || a == b {
        return Err(Error::domain("pair must be two distinct alternatives"));
    }
    if family.carrier() != space.full_set() {
        return Err(Error::domain("family carrier must be the whole society"));
    }
    if family.is_empty() {
        return Err(Error::domain("family must be nonempty"));
    }
    if family.contains(VoterSet::empty()) {
        return Err(Error::domain("family must not contain the empty coalition"));
    }
    StrictScf::from_fn(space, |p| {
        let supporters = profiles::supporters(a, p, b).expect("strict profiles compare the pair");
        if family.contains(supporters) {
            a
        } else {
            b
        }
    })
}

/// Searches for a voter whose top choice among `targets` the table follows
/// on every strict profile. Requires at least three targets; when the table
/// is coalitionally strategy-proof with range `targets`, such a voter must
/// exist, so an absent result signals a manipulable input.
pub fn find_strict_dictator(f: &StrictScf, targets: &[Alternative]) -> Result<Option<Voter>> {
    let universe = f.space().universe();
    if targets.len() < 3 {
        return Err(Error::domain(
            "dictator search needs at least three targets",
        ));
    }
    for (i, x) in targets.iter().enumerate() {
        if !universe.contains(*x) {
            return Err(Error::domain("target outside the universe"));
        }
        if targets[..i].contains(x) {
            return Err(Error::domain("targets must be distinct"));
        }
    }
    'voters: for v in f.space().society().voters() {
        for index in 0..f.num_profiles() {
            let p = f.profile(index);
            let top = *targets
                .iter()
                .min_by_key(|x| p.order(v).class_index(**x).expect("target in range"))
                .expect("targets are nonempty");
            if f.value(index) != top {
                continue 'voters;
            }
        }
        return Ok(Some(v));
    }
    Ok(None)
}

pub fn format_psi_file(spec: &PsiSpec) -> String {
    let space = spec.space();
    let (a, b) = spec.pair();
    let mut out = String::new();
    out.push_str(&profiles::format_universe_line(space.universe()));
    out.push('\n');
    out.push_str(&profiles::format_society_line(space.society()));
    out.push('\n');
    out.push_str(&format!(
        "pair: {} {}; default: {}\n",
        space.universe().label(a),
        space.universe().label(b),
        space.universe().label(spec.default_value())
    ));
    for (k, entry) in spec.entries().iter().enumerate() {
        out.push_str(&format!("entry {k}:\n"));
        out.push_str(&format!(
            "pi: {}\n",
            format_partial_inline(entry.pi(), space)
        ));
        out.push_str(&format!(
            "committee: {}\n",
            format_committee(entry.family(), space.society())
        ));
    }
    out
}

pub fn parse_psi_file(text: &str) -> Result<PsiSpec> {
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

    let (pair_ln, pair_text) = profiles::next_content_line(&mut lines)
        .ok_or_else(|| Error::parse(ln + 1, 1, "missing 'pair:' line"))?;
    let (a, b, default) = parse_pair_line(pair_text, pair_ln, space.universe())?;

    let mut entries = Vec::new();
    let mut last_line = pair_ln;
    while let Some((ln, text)) = profiles::next_content_line(&mut lines) {
        let body = text.trim_start();
        let indent = text.len() - body.len();
        let rest = body
            .strip_prefix("entry")
            .ok_or_else(|| Error::parse(ln, indent + 1, "expected 'entry <k>:'"))?;
        let colon = rest
            .find(':')
            .ok_or_else(|| Error::parse(ln, indent + 1, "expected ':' after the entry number"))?;
        let k: usize = rest[..colon]
            .trim()
            .parse()
            .map_err(|_| Error::parse(ln, indent + 7, "entry number is not an integer"))?;
        if k != entries.len() {
            return Err(Error::parse(
                ln,
                indent + 7,
                format!("entry number {k} out of order, expected {}", entries.len()),
            ));
        }
        if !rest[colon + 1..].trim().is_empty() {
            return Err(Error::parse(
                ln,
                indent + 1,
                "unexpected content after 'entry <k>:'",
            ));
        }

        let (pi_ln, pi_text) = profiles::next_content_line(&mut lines)
            .ok_or_else(|| Error::parse(ln + 1, 1, "missing 'pi:' line"))?;
        let pi_body = pi_text.trim_start();
        let pi_indent = pi_text.len() - pi_body.len();
        let pi_rest = pi_body
            .strip_prefix("pi:")
            .ok_or_else(|| Error::parse(pi_ln, pi_indent + 1, "expected 'pi:'"))?;
        let pi = profiles::parse_partial_inline_at(pi_rest, pi_ln, pi_indent + 4, &space)?;

        let (c_ln, c_text) = profiles::next_content_line(&mut lines)
            .ok_or_else(|| Error::parse(pi_ln + 1, 1, "missing 'committee:' line"))?;
        let c_body = c_text.trim_start();
        let c_indent = c_text.len() - c_body.len();
        let c_rest = c_body
            .strip_prefix("committee:")
            .ok_or_else(|| Error::parse(c_ln, c_indent + 1, "expected 'committee:'"))?;
        let family = parse_committee_at(c_rest, c_ln, c_indent + 11, space.society())?;

        let entry = ExtendedCommittee::new(pi, family, a, b)
            .map_err(|e| Error::parse(c_ln, c_indent + 1, e.to_string()))?;
        entries.push(entry);
        last_line = c_ln;
    }
    if entries.is_empty() {
        return Err(Error::parse(last_line, 1, "at least one entry is required"));
    }
    PsiSpec::new(space, a, b, default, entries)
        .map_err(|e| Error::parse(last_line, 1, e.to_string()))
}

fn parse_pair_line(
    text: &str,
    line: usize,
    universe: &Universe,
) -> Result<(Alternative, Alternative, Alternative)> {
    let body = text.trim_start();
    let indent = text.len() - body.len();
    let rest = body
        .strip_prefix("pair:")
        .ok_or_else(|| Error::parse(line, indent + 1, "expected 'pair:'"))?;
    let semi = rest
        .find(';')
        .ok_or_else(|| Error::parse(line, indent + 1, "expected ';' between pair and default"))?;
    let pair_col = indent + 6;
    let names: Vec<&str> = rest[..semi].split_whitespace().collect();
    if names.len() != 2 {
        return Err(Error::parse(
            line,
            pair_col,
            "expected two alternatives in the pair",
        ));
    }
    let a = universe.find(names[0]).ok_or_else(|| {
        Error::parse(
            line,
            pair_col,
            format!("unknown alternative '{}'", names[0]),
        )
    })?;
    let b = universe.find(names[1]).ok_or_else(|| {
        Error::parse(
            line,
            pair_col,
            format!("unknown alternative '{}'", names[1]),
        )
    })?;
    if a == b {
        return Err(Error::parse(
            line,
            pair_col,
            "pair must be two distinct alternatives",
        ));
    }
    let after = rest[semi + 1..].trim_start();
    let default_col = pair_col + semi + 1;
    let default_text = after
        .strip_prefix("default:")
        .ok_or_else(|| Error::parse(line, default_col, "expected 'default:'"))?;
    let label = default_text.trim().trim_end_matches(';').trim();
    let default = universe
        .find(label)
        .ok_or_else(|| Error::parse(line, default_col, format!("unknown alternative '{label}'")))?;
    if default != a && default != b {
        return Err(Error::parse(
            line,
            default_col,
            "default must be one of the pair",
        ));
    }
    Ok((a, b, default))
}
