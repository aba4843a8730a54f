//! Superset-closed families of voter coalitions and the profile classes
//! they induce.
//!
//! A committee is a family of subsets of a carrier set that is closed under
//! supersets within the carrier. The empty family and the full power set
//! (which contains the empty coalition) are both valid. The dual of a family
//! contains exactly the coalitions whose carrier complement is not a member;
//! duality is an involution and swaps the empty family with the power set.

use crate::error::{Error, Result};
use crate::orders::{Alternative, PairOrder};
use crate::profiles::{
    format_voter_set, is_partial_ab_indifference, supporters, PartialProfile, Profile, Society,
    Voter, VoterSet,
};

/// Largest carrier accepted by the committee enumeration.
pub const MAX_ENUM_CARRIER: usize = 4;

const MAX_CLOSURE_CARRIER: usize = 16;

/// A superset-closed family of subsets of a carrier, sorted by mask.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Committee {
    carrier: VoterSet,
    members: Vec<VoterSet>,
}

impl Committee {
    pub fn new(carrier: VoterSet, mut members: Vec<VoterSet>) -> Result<Self> {
        members.sort();
        members.dedup();
        if !is_superset_closed(&members, carrier)? {
            return Err(Error::domain("family is not closed under supersets"));
        }
        Ok(Self { carrier, members })
    }

    /// The family with no members.
    pub fn empty(carrier: VoterSet) -> Self {
        Self {
            carrier,
            members: Vec::new(),
        }
    }

    /// Every subset of the carrier, including the empty coalition.
    pub fn power_set(carrier: VoterSet) -> Self {
        Self {
            carrier,
            members: subsets_ascending(carrier),
        }
    }

    pub fn carrier(&self) -> VoterSet {
        self.carrier
    }

    pub fn members(&self) -> &[VoterSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_power_set(&self) -> bool {
        self.members.len() == 1usize << self.carrier.len()
    }

    pub fn contains(&self, s: VoterSet) -> bool {
        debug_assert!(s.is_subset_of(self.carrier));
        self.members.binary_search(&s).is_ok()
    }

    /// Membership in the dual family, without materializing it.
    pub fn dual_contains(&self, s: VoterSet) -> bool {
        debug_assert!(s.is_subset_of(self.carrier));
        !self.contains(self.carrier.difference(s))
    }

    pub fn dual(&self) -> Committee {
        let members = subsets_ascending(self.carrier)
            .into_iter()
            .filter(|&s| self.dual_contains(s))
            .collect();
        Committee {
            carrier: self.carrier,
            members,
        }
    }
}

fn subsets_ascending(carrier: VoterSet) -> Vec<VoterSet> {
    let voters: Vec<Voter> = carrier.voters().collect();
    let mut out = Vec::with_capacity(1 << voters.len());
    for pick in 0u32..(1 << voters.len()) {
        let mut s = VoterSet::empty();
        for (i, &v) in voters.iter().enumerate() {
            if pick & (1 << i) != 0 {
                s.insert(v);
            }
        }
        out.push(s);
    }
    out.sort();
    out
}

/// Checks closure under supersets within the carrier.
pub fn is_superset_closed(members: &[VoterSet], carrier: VoterSet) -> Result<bool> {
    if carrier.len() > MAX_CLOSURE_CARRIER {
        return Err(Error::resource(format!(
            "closure check is bounded at carriers of {MAX_CLOSURE_CARRIER} voters"
        )));
    }
    for m in members {
        if !m.is_subset_of(carrier) {
            return Err(Error::domain("family member outside the carrier"));
        }
    }
    for m in members {
        for v in carrier.difference(*m).voters() {
            let mut bigger = *m;
            bigger.insert(v);
            if !members.contains(&bigger) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All superset-closed families on the carrier, in a deterministic order.
///
/// Families are generated as upward closures of antichains of minimal
/// members, which keeps the walk polynomial in the output size.
pub fn enumerate_committees(carrier: VoterSet) -> Result<Vec<Committee>> {
    if carrier.len() > MAX_ENUM_CARRIER {
        return Err(Error::resource(format!(
            "committee enumeration is bounded at carriers of {MAX_ENUM_CARRIER} voters"
        )));
    }
    let subsets = subsets_ascending(carrier);
    let mut out = Vec::new();
    let mut antichain: Vec<VoterSet> = Vec::new();
    emit_closures(carrier, &subsets, 0, &mut antichain, &mut out);
    Ok(out)
}

fn emit_closures(
    carrier: VoterSet,
    subsets: &[VoterSet],
    from: usize,
    antichain: &mut Vec<VoterSet>,
    out: &mut Vec<Committee>,
) {
    let members: Vec<VoterSet> = subsets
        .iter()
        .copied()
        .filter(|&s| antichain.iter().any(|m| m.is_subset_of(s)))
        .collect();
    out.push(Committee { carrier, members });
    for i in from..subsets.len() {
        let cand = subsets[i];
        let incomparable = antichain
            .iter()
            .all(|&m| !m.is_subset_of(cand) && !cand.is_subset_of(m));
        if incomparable {
            antichain.push(cand);
            emit_closures(carrier, subsets, i + 1, antichain, out);
            antichain.pop();
        }
    }
}

/// A partial profile of pair-indifferent orders together with a committee
/// on the complementary carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedCommittee {
    pi: PartialProfile,
    family: Committee,
}

impl ExtendedCommittee {
    pub fn new(
        pi: PartialProfile,
        family: Committee,
        a: Alternative,
        b: Alternative,
    ) -> Result<Self> {
        if !is_partial_ab_indifference(&pi, a, b)? {
            return Err(Error::domain(
                "partial profile must be indifferent on the pair",
            ));
        }
        let expected = pi.domain().complement_within(pi.num_voters());
        if family.carrier() != expected {
            return Err(Error::domain(
                "committee carrier must be the complement of the frozen voters",
            ));
        }
        Ok(Self { pi, family })
    }

    pub fn pi(&self) -> &PartialProfile {
        &self.pi
    }

    pub fn family(&self) -> &Committee {
        &self.family
    }

    /// Membership of `p` in the class for `side` (which must be `a` or `b`):
    /// the side's supporters outside the frozen voters must form a member of
    /// the family (of its dual for `b`), and every frozen voter must either
    /// repeat the frozen order or break the tie toward `side`.
    pub fn in_class(
        &self,
        p: &Profile,
        a: Alternative,
        b: Alternative,
        side: Alternative,
    ) -> Result<bool> {
        if p.num_voters() != self.pi.num_voters() {
            return Err(Error::domain("profile does not match the society size"));
        }
        let carrier = self.family.carrier();
        let (other, toward) = if side == a {
            (b, PairOrder::Above)
        } else if side == b {
            (a, PairOrder::Below)
        } else {
            return Err(Error::domain("side must be one of the pair"));
        };
        let outside = supporters(side, p, other)?.intersection(carrier);
        let family_ok = if side == a {
            self.family.contains(outside)
        } else {
            self.family.dual_contains(outside)
        };
        if !family_ok {
            return Ok(false);
        }
        for (v, frozen) in self.pi.entries() {
            let actual = p.order(*v);
            if actual == frozen {
                continue;
            }
            if actual.restrict_to_pair(a, b)? != toward {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Two-alternative specialization: with only the pair in the universe,
    /// the frozen-voter clause collapses to "no frozen voter supports the
    /// other side". Used to cross-check [`Self::in_class`].
    pub fn in_class_binary(
        &self,
        p: &Profile,
        a: Alternative,
        b: Alternative,
        side: Alternative,
    ) -> Result<bool> {
        if p.num_alternatives() != 2 {
            return Err(Error::domain(
                "binary membership needs a two-alternative universe",
            ));
        }
        if p.num_voters() != self.pi.num_voters() {
            return Err(Error::domain("profile does not match the society size"));
        }
        let carrier = self.family.carrier();
        let other = if side == a {
            b
        } else if side == b {
            a
        } else {
            return Err(Error::domain("side must be one of the pair"));
        };
        let outside = supporters(side, p, other)?.intersection(carrier);
        let family_ok = if side == a {
            self.family.contains(outside)
        } else {
            self.family.dual_contains(outside)
        };
        let inside = supporters(other, p, side)?.intersection(self.pi.domain());
        Ok(family_ok && inside.is_empty())
    }
}

/// Renders `carrier: v0 v1; members: {v0}, {v0 v1}` with `(none)` for an
/// empty carrier or member list and `{}` for the empty coalition.
pub fn format_committee(c: &Committee, society: &Society) -> String {
    let carrier = if c.carrier().is_empty() {
        "(none)".to_string()
    } else {
        c.carrier()
            .voters()
            .map(|v| society.label(v).to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let members = if c.is_empty() {
        "(none)".to_string()
    } else {
        c.members()
            .iter()
            .map(|&m| format_voter_set(m, society))
            .collect::<Vec<_>>()
            .join(", ")
    };
    format!("carrier: {carrier}; members: {members}")
}

pub fn parse_committee(text: &str, society: &Society) -> Result<Committee> {
    parse_committee_at(text, 1, 1, society)
}

pub(crate) fn parse_committee_at(
    text: &str,
    line: usize,
    col0: usize,
    society: &Society,
) -> Result<Committee> {
    let err = |col: usize, msg: String| Error::parse(line, col0 + col, msg);
    let body = text.trim_start();
    let indent = text.len() - body.len();
    let Some(rest) = body.strip_prefix("carrier:") else {
        return Err(err(indent, "expected 'carrier:'".to_string()));
    };
    let Some(semi) = rest.find(';') else {
        return Err(err(
            indent,
            "expected ';' between carrier and members".to_string(),
        ));
    };
    let carrier_text = &rest[..semi];
    let carrier_off = indent + "carrier:".len();
    let mut carrier = VoterSet::empty();
    if carrier_text.trim() != "(none)" {
        for name in carrier_text.split_whitespace() {
            let v = society
                .find(name)
                .ok_or_else(|| err(carrier_off, format!("unknown voter '{name}' in carrier")))?;
            if carrier.contains(v) {
                return Err(err(
                    carrier_off,
                    format!("voter '{name}' listed twice in carrier"),
                ));
            }
            carrier.insert(v);
        }
    }
    let after = rest[semi + 1..].trim_start();
    let members_off = carrier_off + semi + 1;
    let Some(member_text) = after.strip_prefix("members:") else {
        return Err(err(members_off, "expected 'members:'".to_string()));
    };
    let mut members = Vec::new();
    if member_text.trim() != "(none)" {
        for piece in member_text.split(',') {
            let token = piece.trim();
            let inner = token
                .strip_prefix('{')
                .and_then(|t| t.strip_suffix('}'))
                .ok_or_else(|| err(members_off, format!("expected '{{...}}', got '{token}'")))?;
            let mut set = VoterSet::empty();
            for name in inner.split_whitespace() {
                let v = society
                    .find(name)
                    .ok_or_else(|| err(members_off, format!("unknown voter '{name}' in member")))?;
                set.insert(v);
            }
            members.push(set);
        }
    }
    Committee::new(carrier, members).map_err(|e| err(indent, e.to_string()))
}
