//! Societies, profiles, and the canonical profile enumeration.
//!
//! A profile assigns one weak order to every voter. A partial profile fixes
//! the orders of a subset of the society only; composing disjoint partial
//! profiles that cover the society yields a profile. [`ProfileSpace`] caches
//! the canonical weak-order enumeration and indexes profiles
//! lexicographically by voter (voter 0 most significant), which places the
//! all-indifferent profile at index zero.

use crate::error::{Error, Result};
use crate::orders::{
    self, enumerate_weak_orders, format_order, Alternative, PairOrder, Universe, WeakOrder,
};

const MAX_SOCIETY: usize = 12;
const MAX_PROFILES: usize = 2_000_000;

/// One voter, identified by its index into the society.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Voter(pub u8);

impl Voter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// The voter set, with display labels. Ids are contiguous from zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Society {
    labels: Vec<String>,
}

impl Society {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::domain("society must contain at least one voter"));
        }
        if labels.len() > MAX_SOCIETY {
            return Err(Error::domain(format!(
                "society supports at most {MAX_SOCIETY} voters, got {}",
                labels.len()
            )));
        }
        for label in &labels {
            if label.is_empty() || !label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::domain(format!(
                    "voter label '{label}' must be nonempty over [A-Za-z0-9_]"
                )));
            }
        }
        for (i, label) in labels.iter().enumerate() {
            if labels[..i].contains(label) {
                return Err(Error::domain(format!("duplicate voter label '{label}'")));
            }
        }
        Ok(Self { labels })
    }

    /// Society labelled `v0`, `v1`, ...
    pub fn with_default_labels(n: usize) -> Result<Self> {
        Self::new((0..n).map(|i| format!("v{i}")).collect())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn voters(&self) -> impl Iterator<Item = Voter> + '_ {
        (0..self.labels.len()).map(|i| Voter(i as u8))
    }

    /// Panics if `v` is outside the society.
    pub fn label(&self, v: Voter) -> &str {
        &self.labels[v.index()]
    }

    pub fn labels(&self) -> &[String] {
        self.labels.as_slice()
    }

    pub fn find(&self, label: &str) -> Option<Voter> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| Voter(i as u8))
    }

    pub fn full_set(&self) -> VoterSet {
        VoterSet::full(self.labels.len())
    }
}

/// A set of voters, stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VoterSet {
    bits: u32,
}

impl VoterSet {
    pub fn empty() -> Self {
        Self { bits: 0 }
    }

    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_SOCIETY);
        Self {
            bits: if n == 32 { u32::MAX } else { (1u32 << n) - 1 },
        }
    }

    pub fn singleton(v: Voter) -> Self {
        Self {
            bits: 1 << v.index(),
        }
    }

    pub fn from_mask(bits: u32) -> Self {
        Self { bits }
    }

    pub fn from_voters(voters: impl IntoIterator<Item = Voter>) -> Self {
        let mut bits = 0;
        for v in voters {
            bits |= 1 << v.index();
        }
        Self { bits }
    }

    pub fn mask(self) -> u32 {
        self.bits
    }

    pub fn contains(self, v: Voter) -> bool {
        self.bits & (1 << v.index()) != 0
    }

    pub fn insert(&mut self, v: Voter) {
        self.bits |= 1 << v.index();
    }

    pub fn union(self, other: Self) -> Self {
        Self {
            bits: self.bits | other.bits,
        }
    }

    pub fn intersection(self, other: Self) -> Self {
        Self {
            bits: self.bits & other.bits,
        }
    }

    pub fn difference(self, other: Self) -> Self {
        Self {
            bits: self.bits & !other.bits,
        }
    }

    pub fn complement_within(self, n: usize) -> Self {
        Self {
            bits: Self::full(n).bits & !self.bits,
        }
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn voters(self) -> impl Iterator<Item = Voter> {
        (0..32)
            .filter(move |i| self.bits & (1 << i) != 0)
            .map(Voter)
    }
}

pub fn format_voter_set(set: VoterSet, society: &Society) -> String {
    let names: Vec<&str> = set.voters().map(|v| society.label(v)).collect();
    format!("{{{}}}", names.join(" "))
}

/// A total assignment of weak orders to voters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Profile {
    orders: Vec<WeakOrder>,
}

impl Profile {
    pub fn new(orders: Vec<WeakOrder>) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::domain("profile needs at least one voter"));
        }
        let n = orders[0].num_alternatives();
        if orders.iter().any(|w| w.num_alternatives() != n) {
            return Err(Error::domain("orders in a profile must share one universe"));
        }
        Ok(Self { orders })
    }

    pub fn num_voters(&self) -> usize {
        self.orders.len()
    }

    pub fn num_alternatives(&self) -> usize {
        self.orders[0].num_alternatives()
    }

    /// Panics if `v` is outside the society.
    pub fn order(&self, v: Voter) -> &WeakOrder {
        &self.orders[v.index()]
    }

    pub fn orders(&self) -> &[WeakOrder] {
        &self.orders
    }

    /// Copy of the profile with one voter's order replaced.
    pub fn with_order(&self, v: Voter, w: WeakOrder) -> Result<Profile> {
        if v.index() >= self.orders.len() {
            return Err(Error::domain(format!("voter id {} outside society", v.0)));
        }
        if w.num_alternatives() != self.num_alternatives() {
            return Err(Error::domain("replacement order has a different universe"));
        }
        let mut orders = self.orders.clone();
        orders[v.index()] = w;
        Ok(Profile { orders })
    }

    pub fn restrict(&self, set: VoterSet) -> PartialProfile {
        let entries = set
            .voters()
            .filter(|v| v.index() < self.orders.len())
            .map(|v| (v, self.orders[v.index()].clone()))
            .collect();
        PartialProfile {
            num_voters: self.orders.len(),
            entries,
        }
    }
}

/// Orders for a subset of the society, sorted by voter id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialProfile {
    num_voters: usize,
    entries: Vec<(Voter, WeakOrder)>,
}

impl PartialProfile {
    pub fn empty(num_voters: usize) -> Self {
        Self {
            num_voters,
            entries: Vec::new(),
        }
    }

    pub fn new(num_voters: usize, mut entries: Vec<(Voter, WeakOrder)>) -> Result<Self> {
        entries.sort_by_key(|(v, _)| *v);
        for pair in entries.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(Error::domain(format!(
                    "voter id {} assigned twice",
                    pair[0].0 .0
                )));
            }
        }
        if let Some((v, _)) = entries.last() {
            if v.index() >= num_voters {
                return Err(Error::domain(format!(
                    "voter id {} outside society of size {num_voters}",
                    v.0
                )));
            }
        }
        if let Some(n) = entries.first().map(|(_, w)| w.num_alternatives()) {
            if entries.iter().any(|(_, w)| w.num_alternatives() != n) {
                return Err(Error::domain(
                    "orders in a partial profile must share one universe",
                ));
            }
        }
        Ok(Self {
            num_voters,
            entries,
        })
    }

    pub fn num_voters(&self) -> usize {
        self.num_voters
    }

    pub fn domain(&self) -> VoterSet {
        VoterSet::from_voters(self.entries.iter().map(|(v, _)| *v))
    }

    pub fn entries(&self) -> &[(Voter, WeakOrder)] {
        &self.entries
    }

    pub fn get(&self, v: Voter) -> Option<&WeakOrder> {
        self.entries
            .binary_search_by_key(&v, |(u, _)| *u)
            .ok()
            .map(|i| &self.entries[i].1)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }
}

/// Merges partial profiles whose domains partition the society.
pub fn compose(parts: &[PartialProfile]) -> Result<Profile> {
    let Some(first) = parts.first() else {
        return Err(Error::domain("compose needs at least one part"));
    };
    let n = first.num_voters();
    if parts.iter().any(|p| p.num_voters() != n) {
        return Err(Error::domain("parts disagree on the society size"));
    }
    let mut slots: Vec<Option<WeakOrder>> = vec![None; n];
    for part in parts {
        for (v, w) in part.entries() {
            if slots[v.index()].is_some() {
                return Err(Error::domain(format!(
                    "domains overlap on voter id {}",
                    v.0
                )));
            }
            slots[v.index()] = Some(w.clone());
        }
    }
    let orders: Vec<WeakOrder> = slots
        .into_iter()
        .enumerate()
        .map(|(i, s)| s.ok_or_else(|| Error::domain(format!("voter id {i} not covered"))))
        .collect::<Result<_>>()?;
    Profile::new(orders)
}

/// Voters indifferent between `a` and `b` under `p`.
pub fn indifference_set(p: &Profile, a: Alternative, b: Alternative) -> Result<VoterSet> {
    if a == b {
        return Err(Error::domain(
            "indifference set needs two distinct alternatives",
        ));
    }
    let mut set = VoterSet::empty();
    for v in 0..p.num_voters() {
        if p.orders[v].compare(a, b)? == PairOrder::Tied {
            set.insert(Voter(v as u8));
        }
    }
    Ok(set)
}

/// Voters who strictly prefer `x` to `other` under `p`.
pub fn supporters(x: Alternative, p: &Profile, other: Alternative) -> Result<VoterSet> {
    if x == other {
        return Err(Error::domain("supporters needs two distinct alternatives"));
    }
    let mut set = VoterSet::empty();
    for v in 0..p.num_voters() {
        if p.orders[v].compare(x, other)? == PairOrder::Above {
            set.insert(Voter(v as u8));
        }
    }
    Ok(set)
}

/// Voters whose orders agree between `p` and `q`, either literally or in
/// their strict restriction to the pair.
pub fn equivalence_set(
    p: &Profile,
    q: &Profile,
    a: Alternative,
    b: Alternative,
) -> Result<VoterSet> {
    if p.num_voters() != q.num_voters() {
        return Err(Error::domain("profiles disagree on the society size"));
    }
    if p.num_alternatives() != q.num_alternatives() {
        return Err(Error::domain("profiles disagree on the universe size"));
    }
    if a == b {
        return Err(Error::domain(
            "equivalence set needs two distinct alternatives",
        ));
    }
    let mut set = VoterSet::empty();
    for v in 0..p.num_voters() {
        if p.orders[v] == q.orders[v] {
            set.insert(Voter(v as u8));
            continue;
        }
        let rp = p.orders[v].restrict_to_pair(a, b)?;
        let rq = q.orders[v].restrict_to_pair(a, b)?;
        if rp == rq && rp != PairOrder::Tied {
            set.insert(Voter(v as u8));
        }
    }
    Ok(set)
}

/// True when every order in `pi` is indifferent between `a` and `b`.
pub fn is_partial_ab_indifference(
    pi: &PartialProfile,
    a: Alternative,
    b: Alternative,
) -> Result<bool> {
    if a == b {
        return Err(Error::domain("needs two distinct alternatives"));
    }
    for (_, w) in pi.entries() {
        if w.compare(a, b)? != PairOrder::Tied {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Universe, society, and the canonical profile enumeration.
///
/// Profiles are indexed lexicographically by voter over the canonical
/// weak-order ranking; index zero is the all-indifferent profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileSpace {
    universe: Universe,
    society: Society,
    orders: Vec<WeakOrder>,
    num_profiles: usize,
}

impl ProfileSpace {
    pub fn new(universe: Universe, society: Society) -> Result<Self> {
        let orders = enumerate_weak_orders(&universe)?;
        let mut num_profiles = 1usize;
        for _ in 0..society.len() {
            num_profiles = num_profiles
                .checked_mul(orders.len())
                .filter(|&n| n <= MAX_PROFILES)
                .ok_or_else(|| {
                    Error::resource(format!("profile space exceeds {MAX_PROFILES} profiles"))
                })?;
        }
        Ok(Self {
            universe,
            society,
            orders,
            num_profiles,
        })
    }

    pub fn with_default_labels(num_voters: usize, num_alternatives: usize) -> Result<Self> {
        Self::new(
            Universe::with_default_labels(num_alternatives)?,
            Society::with_default_labels(num_voters)?,
        )
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn society(&self) -> &Society {
        &self.society
    }

    pub fn num_voters(&self) -> usize {
        self.society.len()
    }

    pub fn num_alternatives(&self) -> usize {
        self.universe.len()
    }

    pub fn num_orders(&self) -> usize {
        self.orders.len()
    }

    pub fn num_profiles(&self) -> usize {
        self.num_profiles
    }

    pub fn orders(&self) -> &[WeakOrder] {
        &self.orders
    }

    pub fn order_rank(&self, w: &WeakOrder) -> Option<usize> {
        self.orders.iter().position(|o| o == w)
    }

    /// Per-voter order ranks of the profile at `index`, voter 0 first.
    pub fn ranks(&self, index: usize) -> Vec<usize> {
        debug_assert!(index < self.num_profiles);
        let m = self.orders.len();
        let nv = self.society.len();
        let mut ranks = vec![0usize; nv];
        let mut rest = index;
        for v in (0..nv).rev() {
            ranks[v] = rest % m;
            rest /= m;
        }
        ranks
    }

    pub fn index_from_ranks(&self, ranks: &[usize]) -> usize {
        debug_assert_eq!(ranks.len(), self.society.len());
        let m = self.orders.len();
        ranks.iter().fold(0, |acc, &r| acc * m + r)
    }

    pub fn profile(&self, index: usize) -> Profile {
        let orders = self
            .ranks(index)
            .into_iter()
            .map(|r| self.orders[r].clone())
            .collect();
        Profile { orders }
    }

    pub fn index_of(&self, p: &Profile) -> Result<usize> {
        if p.num_voters() != self.society.len() {
            return Err(Error::domain("profile does not match the society size"));
        }
        let mut ranks = Vec::with_capacity(p.num_voters());
        for w in p.orders() {
            let r = self
                .order_rank(w)
                .ok_or_else(|| Error::domain("order does not match the universe size"))?;
            ranks.push(r);
        }
        Ok(self.index_from_ranks(&ranks))
    }

    pub fn profiles(&self) -> impl Iterator<Item = Profile> + '_ {
        (0..self.num_profiles).map(|i| self.profile(i))
    }

    /// The profile in which every voter reports full indifference.
    pub fn designated_indifference_profile(&self) -> Profile {
        Profile {
            orders: vec![WeakOrder::full_indifference(self.universe.len()); self.society.len()],
        }
    }

    pub fn full_set(&self) -> VoterSet {
        self.society.full_set()
    }
}

/// Profiles in which every voter is indifferent between `a` and `b`, in
/// enumeration order; the all-indifferent profile comes first.
pub fn unanimous_indifference_profiles(
    space: &ProfileSpace,
    a: Alternative,
    b: Alternative,
) -> Result<Vec<Profile>> {
    if a == b {
        return Err(Error::domain("needs two distinct alternatives"));
    }
    let mut tied = Vec::new();
    for w in space.orders() {
        if w.compare(a, b)? == PairOrder::Tied {
            tied.push(w.clone());
        }
    }
    let nv = space.num_voters();
    let mut out = Vec::new();
    let mut digits = vec![0usize; nv];
    loop {
        out.push(Profile {
            orders: digits.iter().map(|&d| tied[d].clone()).collect(),
        });
        let mut pos = nv;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            if digits[pos] + 1 < tied.len() {
                digits[pos] += 1;
                for d in &mut digits[pos + 1..] {
                    *d = 0;
                }
                break;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Textual formats.

pub fn format_universe_line(u: &Universe) -> String {
    format!("universe: {}", u.labels().join(" "))
}

pub fn format_society_line(s: &Society) -> String {
    format!("society: {}", s.labels().join(" "))
}

pub(crate) fn parse_keyword_line<'a>(
    text: &'a str,
    keyword: &str,
    line: usize,
) -> Result<(usize, &'a str)> {
    let trimmed = text.trim_start();
    let indent = text.len() - trimmed.len();
    let Some(rest) = trimmed.strip_prefix(keyword) else {
        return Err(Error::parse(
            line,
            indent + 1,
            format!("expected '{keyword}'"),
        ));
    };
    let Some(rest) = rest.strip_prefix(':') else {
        return Err(Error::parse(
            line,
            indent + keyword.len() + 1,
            format!("expected ':' after '{keyword}'"),
        ));
    };
    Ok((indent + keyword.len() + 2, rest))
}

pub(crate) fn parse_universe_line(text: &str, line: usize) -> Result<Universe> {
    let (_, rest) = parse_keyword_line(text, "universe", line)?;
    let labels: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
    Universe::new(labels).map_err(|e| Error::parse(line, 1, e.to_string()))
}

pub(crate) fn parse_society_line(text: &str, line: usize) -> Result<Society> {
    let (_, rest) = parse_keyword_line(text, "society", line)?;
    let labels: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
    Society::new(labels).map_err(|e| Error::parse(line, 1, e.to_string()))
}

/// Renders one voter's entry, e.g. `v0: a~b>c`.
fn format_voter_entry(v: Voter, w: &WeakOrder, space: &ProfileSpace) -> String {
    format!(
        "{}: {}",
        space.society().label(v),
        format_order(w, space.universe())
    )
}

/// Renders `v0: a~b>c; v1: c>a~b`.
pub fn format_profile_inline(p: &Profile, space: &ProfileSpace) -> String {
    space
        .society()
        .voters()
        .map(|v| format_voter_entry(v, p.order(v), space))
        .collect::<Vec<_>>()
        .join("; ")
}

/// Renders the domain's entries, or `(empty)`.
pub fn format_partial_inline(pi: &PartialProfile, space: &ProfileSpace) -> String {
    if pi.is_empty() {
        return "(empty)".to_string();
    }
    pi.entries()
        .iter()
        .map(|(v, w)| format_voter_entry(*v, w, space))
        .collect::<Vec<_>>()
        .join("; ")
}

/// Parses entries `v: order` separated by `;`, offset for error reporting.
pub(crate) fn parse_entries_at(
    text: &str,
    line: usize,
    col0: usize,
    space: &ProfileSpace,
) -> Result<Vec<(Voter, WeakOrder)>> {
    let mut entries = Vec::new();
    for (off, piece) in orders::split_with_offsets(text, ';') {
        let lead = piece.len() - piece.trim_start().len();
        let body = piece.trim();
        let col = col0 + off + lead;
        let Some(colon) = body.find(':') else {
            return Err(Error::parse(line, col, "expected 'voter: order'"));
        };
        let name = body[..colon].trim();
        let voter = space
            .society()
            .find(name)
            .ok_or_else(|| Error::parse(line, col, format!("unknown voter '{name}'")))?;
        let order_text = &body[colon + 1..];
        let order = orders::parse_order_at(order_text, line, col + colon + 1, space.universe())?;
        entries.push((voter, order));
    }
    Ok(entries)
}

pub fn parse_profile_inline(text: &str, space: &ProfileSpace) -> Result<Profile> {
    parse_profile_inline_at(text, 1, 1, space)
}

pub(crate) fn parse_profile_inline_at(
    text: &str,
    line: usize,
    col0: usize,
    space: &ProfileSpace,
) -> Result<Profile> {
    let entries = parse_entries_at(text, line, col0, space)?;
    let pi = PartialProfile::new(space.num_voters(), entries)
        .map_err(|e| Error::parse(line, col0, e.to_string()))?;
    if pi.len() != space.num_voters() {
        return Err(Error::parse(line, col0, "profile must list every voter"));
    }
    compose(std::slice::from_ref(&pi)).map_err(|e| Error::parse(line, col0, e.to_string()))
}

pub(crate) fn parse_partial_inline_at(
    text: &str,
    line: usize,
    col0: usize,
    space: &ProfileSpace,
) -> Result<PartialProfile> {
    if text.trim() == "(empty)" {
        return Ok(PartialProfile::empty(space.num_voters()));
    }
    let entries = parse_entries_at(text, line, col0, space)?;
    PartialProfile::new(space.num_voters(), entries)
        .map_err(|e| Error::parse(line, col0, e.to_string()))
}

/// Renders a profile file: universe and society headers, then one line per
/// voter in id order.
pub fn format_profile_file(p: &Profile, space: &ProfileSpace) -> String {
    let mut out = String::new();
    out.push_str(&format_universe_line(space.universe()));
    out.push('\n');
    out.push_str(&format_society_line(space.society()));
    out.push('\n');
    for v in space.society().voters() {
        out.push_str(&format_voter_entry(v, p.order(v), space));
        out.push('\n');
    }
    out
}

pub fn parse_profile_file(text: &str) -> Result<(ProfileSpace, Profile)> {
    let mut lines = text.lines().enumerate();
    let (ln, first) = next_content_line(&mut lines)
        .ok_or_else(|| Error::parse(1, 1, "missing 'universe:' header"))?;
    let universe = parse_universe_line(first, ln)?;
    let (ln, second) = next_content_line(&mut lines)
        .ok_or_else(|| Error::parse(ln + 1, 1, "missing 'society:' header"))?;
    let society = parse_society_line(second, ln)?;
    let space =
        ProfileSpace::new(universe, society).map_err(|e| Error::parse(ln, 1, e.to_string()))?;

    let mut slots: Vec<Option<WeakOrder>> = vec![None; space.num_voters()];
    let mut last_line = ln;
    while let Some((ln, text)) = next_content_line(&mut lines) {
        last_line = ln;
        let entries = parse_entries_at(text, ln, 1, &space)?;
        for (v, w) in entries {
            if slots[v.index()].is_some() {
                return Err(Error::parse(
                    ln,
                    1,
                    format!("voter '{}' assigned twice", space.society().label(v)),
                ));
            }
            slots[v.index()] = Some(w);
        }
    }
    let mut orders = Vec::with_capacity(space.num_voters());
    for (i, slot) in slots.into_iter().enumerate() {
        let Some(w) = slot else {
            return Err(Error::parse(
                last_line,
                1,
                format!(
                    "missing order for voter '{}'",
                    space.society().label(Voter(i as u8))
                ),
            ));
        };
        orders.push(w);
    }
    Ok((space, Profile { orders }))
}

/// Skips blank lines and `#` comments; yields 1-based line numbers.
pub(crate) fn next_content_line<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
) -> Option<(usize, &'a str)> {
    for (i, text) in lines.by_ref() {
        let t = text.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        return Some((i + 1, text));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orders::parse_order;

    fn space(nv: usize, na: usize) -> ProfileSpace {
        ProfileSpace::with_default_labels(nv, na).unwrap()
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

    const A: Alternative = Alternative(0);
    const B: Alternative = Alternative(1);

    #[test]
    fn enumeration_is_lexicographic_with_indifference_first() {
        let s = space(2, 2);
        assert_eq!(s.num_profiles(), 9);
        assert_eq!(
            s.profile(0),
            s.designated_indifference_profile(),
            "all-indifferent profile must rank first"
        );
        for i in 0..s.num_profiles() {
            assert_eq!(s.index_of(&s.profile(i)).unwrap(), i);
        }
        // Voter 0 is the most significant digit.
        let p = s.profile(1);
        assert!(p.order(Voter(0)).num_classes() == 1 && p.order(Voter(1)).is_strict());
    }

    #[test]
    fn sets_partition_the_society() {
        let s = space(2, 3);
        for p in s.profiles() {
            let i = indifference_set(&p, A, B).unwrap();
            let da = supporters(A, &p, B).unwrap();
            let db = supporters(B, &p, A).unwrap();
            assert_eq!(i.union(da).union(db), s.full_set());
            assert!(i.intersection(da).is_empty());
            assert!(i.intersection(db).is_empty());
            assert!(da.intersection(db).is_empty());
        }
    }

    #[test]
    fn indifference_and_supporter_fixture_values() {
        let s = space(2, 3);
        let p = profile(&s, &["a~b>c", "a>b>c"]);
        assert_eq!(
            indifference_set(&p, A, B).unwrap(),
            VoterSet::from_mask(0b01)
        );
        assert_eq!(supporters(A, &p, B).unwrap(), VoterSet::from_mask(0b10));
        assert_eq!(supporters(B, &p, A).unwrap(), VoterSet::empty());
        assert!(matches!(indifference_set(&p, A, A), Err(Error::Domain(_))));
    }

    #[test]
    fn equivalence_set_cases() {
        let s = space(2, 3);
        let p = profile(&s, &["a~b>c", "a~b>c"]);
        assert_eq!(equivalence_set(&p, &p, A, B).unwrap(), s.full_set());

        // Indifferent restrictions never match through the strict clause.
        let q = profile(&s, &["c>a~b", "c>a~b"]);
        assert_eq!(equivalence_set(&p, &q, A, B).unwrap(), VoterSet::empty());

        // Distinct orders with the same strict restriction do match.
        let p2 = profile(&s, &["a>b>c", "a~b>c"]);
        let q2 = profile(&s, &["a>c>b", "c>a~b"]);
        assert_eq!(
            equivalence_set(&p2, &q2, A, B).unwrap(),
            VoterSet::from_mask(0b01)
        );

        // Symmetry across all pairs at a small scale.
        let s12 = space(1, 2);
        for p in s12.profiles() {
            for q in s12.profiles() {
                assert_eq!(
                    equivalence_set(&p, &q, A, B).unwrap(),
                    equivalence_set(&q, &p, A, B).unwrap()
                );
            }
        }
    }

    #[test]
    fn compose_partition_roundtrip() {
        let s = space(3, 2);
        let p = profile(&s, &["a>b", "b>a", "a~b"]);
        let parts = [
            p.restrict(VoterSet::from_mask(0b101)),
            p.restrict(VoterSet::from_mask(0b010)),
        ];
        assert_eq!(compose(&parts).unwrap(), p);

        // Empty part composes with a full part.
        let parts = [p.restrict(s.full_set()), PartialProfile::empty(3)];
        assert_eq!(compose(&parts).unwrap(), p);

        let overlapping = [
            p.restrict(VoterSet::from_mask(0b011)),
            p.restrict(VoterSet::from_mask(0b110)),
        ];
        assert!(matches!(compose(&overlapping), Err(Error::Domain(_))));

        let missing = [p.restrict(VoterSet::from_mask(0b001))];
        assert!(matches!(compose(&missing), Err(Error::Domain(_))));
    }

    /// Mixed profile built from parts of two profiles plus fresh orders:
    /// the shape used when reasoning about coalition deviations.
    #[test]
    fn compose_mixed_parts_and_dominance_sets() {
        let s = space(4, 2);
        let tie = parse_order("a~b", s.universe()).unwrap();
        // p: voter 0 arbitrary, the coalition {1,2,3} prefers b.
        let p = profile(&s, &["a>b", "b>a", "b>a", "b>a"]);
        // q: equal off the coalition; inside it voter 1 keeps b>a, voter 2
        // reports a>b, voter 3 reports a~b.
        let q = profile(&s, &["a>b", "b>a", "a>b", "a~b"]);
        let r = compose(&[
            p.restrict(VoterSet::from_mask(0b0011)),
            PartialProfile::new(4, vec![(Voter(2), tie.clone())]).unwrap(),
            q.restrict(VoterSet::from_mask(0b1000)),
        ])
        .unwrap();
        assert_eq!(r, profile(&s, &["a>b", "b>a", "a~b", "a~b"]));
        assert_eq!(
            equivalence_set(&r, &q, A, B).unwrap(),
            VoterSet::from_mask(0b1011)
        );
        assert_eq!(
            equivalence_set(&r, &p, A, B).unwrap(),
            VoterSet::from_mask(0b0011)
        );
    }

    #[test]
    fn partial_ab_indifference() {
        let s = space(2, 3);
        assert!(is_partial_ab_indifference(&PartialProfile::empty(2), A, B).unwrap());
        let pi = PartialProfile::new(
            2,
            vec![(Voter(0), parse_order("a~b>c", s.universe()).unwrap())],
        )
        .unwrap();
        assert!(is_partial_ab_indifference(&pi, A, B).unwrap());
        let pi = PartialProfile::new(
            2,
            vec![(Voter(0), parse_order("a>b>c", s.universe()).unwrap())],
        )
        .unwrap();
        assert!(!is_partial_ab_indifference(&pi, A, B).unwrap());
    }

    #[test]
    fn unanimous_indifference_enumeration() {
        let s = space(2, 2);
        let all = unanimous_indifference_profiles(&s, A, B).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0], s.designated_indifference_profile());

        let s13 = space(1, 3);
        let all = unanimous_indifference_profiles(&s13, A, B).unwrap();
        let texts: Vec<String> = all
            .iter()
            .map(|p| format_order(p.order(Voter(0)), s13.universe()))
            .collect();
        assert_eq!(texts, vec!["a~b~c", "a~b>c", "c>a~b"]);
        assert_eq!(all[0], s13.designated_indifference_profile());
    }

    #[test]
    fn profile_file_roundtrip() {
        let s = space(2, 3);
        for index in [0, 1, 42, 168] {
            let p = s.profile(index);
            let text = format_profile_file(&p, &s);
            let (s2, p2) = parse_profile_file(&text).unwrap();
            assert_eq!(s2, s);
            assert_eq!(p2, p);
        }
    }

    #[test]
    fn profile_file_errors_carry_positions() {
        let text = "universe: a b\nsociety: v0 v1\nv0: a>b\nv0: b>a\n";
        match parse_profile_file(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
        let text = "universe: a b\nsociety: v0 v1\nv0: a>b\n";
        assert!(parse_profile_file(text).is_err());
        let text = "universe: a b\nsociety: v0 v1\nv0: a>b\nv1: q>a\n";
        match parse_profile_file(text) {
            Err(Error::Parse { line, column, .. }) => {
                assert_eq!(line, 4);
                assert_eq!(column, 5);
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn voter_set_operations() {
        let set = VoterSet::from_voters([Voter(0), Voter(2)]);
        assert_eq!(set.mask(), 0b101);
        assert_eq!(set.len(), 2);
        assert!(set.contains(Voter(2)) && !set.contains(Voter(1)));
        assert_eq!(set.complement_within(3), VoterSet::from_mask(0b010));
        assert!(VoterSet::from_mask(0b001).is_subset_of(set));
        let society = Society::with_default_labels(3).unwrap();
        assert_eq!(format_voter_set(set, &society), "{v0 v2}");
        assert_eq!(format_voter_set(VoterSet::empty(), &society), "{}");
    }
}
