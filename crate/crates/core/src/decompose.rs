//! The converse direction to the `psi` module: rebuild a sequential
//! committee spec from any coalitionally strategy-proof table with
//! two-element range.
//!
//! The run starts from the committee extracted off the strict subdomain
//! (entry 0, no frozen voters), then repeatedly takes the first profile not
//! yet claimed by an entry whose value differs from the default, freezes its
//! pair-indifferent voters, and attaches the committee of the table
//! restricted to the remaining voters. Every step is checked against the
//! input table; a failed check reports the offending profile and rejects the
//! input as manipulable.

use std::sync::Arc;

use crate::committees::{is_superset_closed, Committee, ExtendedCommittee};
use crate::dominance::compatibility_witness;
use crate::error::{Error, Result};
use crate::orders::{canonical_strict_pair, Alternative};
use crate::profiles::{
    format_profile_inline, indifference_set, PartialProfile, Profile, ProfileSpace, Society, Voter,
    VoterSet,
};
use crate::psi::PsiSpec;
use crate::scf::{check_pair_range, ScfTable};

/// The unique family on the whole society whose two induced classes are
/// value-correct for `f`: membership of each coalition `S` is probed with
/// the strict profile putting `a` first on `S` and `b` first elsewhere.
/// Probes that do not form a superset closed family free of the empty
/// coalition reject the input.
pub fn extract_base_committee(f: &ScfTable, a: Alternative, b: Alternative) -> Result<Committee> {
    let space = f.space();
    let universe = space.universe();
    if !universe.contains(a) || !universe.contains(b) || a == b {
        return Err(Error::domain("pair must be two distinct alternatives"));
    }
    let (s1, s2) = canonical_strict_pair(a, b, universe)?;
    let nv = space.num_voters();
    let mut members = Vec::new();
    for mask in 0..(1u32 << nv) {
        let s = VoterSet::from_mask(mask);
        let probe = Profile::new(
            (0..nv)
                .map(|v| {
                    if s.contains(Voter(v as u8)) {
                        s1.clone()
                    } else {
                        s2.clone()
                    }
                })
                .collect(),
        )?;
        if f.value_of(&probe)? == a {
            members.push(s);
        }
    }
    if !is_superset_closed(&members, space.full_set())? {
        return Err(Error::not_csp(
            "strict-profile probes do not form a superset closed family",
        ));
    }
    if members.is_empty() {
        return Err(Error::not_csp(format!(
            "every strict probe chooses '{}'; the strict restriction is constant",
            universe.label(b)
        )));
    }
    if members.first() == Some(&VoterSet::empty()) {
        return Err(Error::not_csp(format!(
            "every strict probe chooses '{}'; the strict restriction is constant",
            universe.label(a)
        )));
    }
    Committee::new(space.full_set(), members)
}

/// The table over the voters outside `dom(pi)`, obtained by freezing the
/// voters of `dom(pi)` at their orders in `pi`. The sub-society keeps the
/// original labels. Freezing nobody returns the table unchanged; freezing
/// everybody leaves no society and is rejected.
pub fn restrict_scf(f: &ScfTable, pi: &PartialProfile) -> Result<ScfTable> {
    let space = f.space();
    if pi.num_voters() != space.num_voters() {
        return Err(Error::domain("partial profile does not match the society"));
    }
    if pi.is_empty() {
        return Ok(f.clone());
    }
    let free = pi.domain().complement_within(space.num_voters());
    if free.is_empty() {
        return Err(Error::domain("cannot restrict away every voter"));
    }
    let free_voters: Vec<Voter> = free.voters().collect();
    let labels = free_voters
        .iter()
        .map(|v| space.society().label(*v).to_string())
        .collect();
    let sub_space = Arc::new(ProfileSpace::new(
        space.universe().clone(),
        Society::new(labels)?,
    )?);
    let mut values = Vec::with_capacity(sub_space.num_profiles());
    for r in sub_space.profiles() {
        let full = Profile::new(
            (0..space.num_voters())
                .map(|g| {
                    let v = Voter(g as u8);
                    match pi.get(v) {
                        Some(w) => w.clone(),
                        None => {
                            let j = free_voters.iter().position(|u| *u == v).unwrap();
                            r.order(Voter(j as u8)).clone()
                        }
                    }
                })
                .collect(),
        )?;
        values.push(f.value_of(&full)?);
    }
    ScfTable::new(sub_space, values)
}

/// One run of the representation: an enumeration of the profiles with the
/// chosen unanimity profile first, the set of profiles claimed by the
/// entries built so far, and the entries themselves.
#[derive(Debug, Clone)]
pub struct DecompositionState {
    enumeration: Vec<usize>,
    covered: Vec<bool>,
    entries: Vec<ExtendedCommittee>,
    eta_history: Vec<usize>,
}

impl DecompositionState {
    /// Canonical enumeration with the profile at `pi_index` moved to the
    /// front.
    pub fn new(f: &ScfTable, pi_index: usize) -> Result<Self> {
        let n = f.space().num_profiles();
        if pi_index >= n {
            return Err(Error::domain("profile index out of range"));
        }
        let mut enumeration = Vec::with_capacity(n);
        enumeration.push(pi_index);
        enumeration.extend((0..n).filter(|&i| i != pi_index));
        Self::with_enumeration(f, enumeration)
    }

    /// Arbitrary enumeration (a permutation of all profile indices); the
    /// profile listed first plays the role of the designated unanimity
    /// profile.
    pub fn with_enumeration(f: &ScfTable, enumeration: Vec<usize>) -> Result<Self> {
        let n = f.space().num_profiles();
        let mut seen = vec![false; n];
        if enumeration.len() != n {
            return Err(Error::domain("enumeration must list every profile once"));
        }
        for &i in &enumeration {
            if i >= n || seen[i] {
                return Err(Error::domain("enumeration must list every profile once"));
            }
            seen[i] = true;
        }
        Ok(Self {
            enumeration,
            covered: vec![false; n],
            entries: Vec::new(),
            eta_history: Vec::new(),
        })
    }

    pub fn entries(&self) -> &[ExtendedCommittee] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<ExtendedCommittee> {
        self.entries
    }

    /// Positions in the enumeration whose profiles are unclaimed and carry a
    /// value other than `x`.
    pub fn delta(&self, f: &ScfTable, x: Alternative) -> Vec<usize> {
        self.enumeration
            .iter()
            .enumerate()
            .filter(|(_, &idx)| !self.covered[idx] && f.value(idx) != x)
            .map(|(eta, _)| eta)
            .collect()
    }

    /// Enumeration positions of the profiles the entries were grown from;
    /// strictly increasing along the run.
    pub fn eta_history(&self) -> &[usize] {
        &self.eta_history
    }

    pub fn covered_count(&self) -> usize {
        self.covered.iter().filter(|&&c| c).count()
    }

    /// Verifies the entry against the whole table (the `a`-side class must
    /// sit inside `{f=a}`, the `b`-side inside `{f=b}`, and the designated
    /// profile must stay unclaimed), then marks its classes covered.
    pub fn push_entry(
        &mut self,
        f: &ScfTable,
        a: Alternative,
        b: Alternative,
        entry: ExtendedCommittee,
    ) -> Result<()> {
        let space = f.space();
        let pi = space.profile(self.enumeration[0]);
        for side in [a, b] {
            if entry.in_class(&pi, a, b, side)? {
                return Err(Error::not_csp(format!(
                    "the designated profile {} falls into an entry class",
                    format_profile_inline(&pi, space)
                )));
            }
        }
        for (idx, p) in space.profiles().enumerate() {
            for side in [a, b] {
                if entry.in_class(&p, a, b, side)? {
                    if f.value(idx) != side {
                        return Err(Error::not_csp(format!(
                            "profile P#{idx} {} is claimed for '{}' but the table says '{}'",
                            format_profile_inline(&p, space),
                            space.universe().label(side),
                            space.universe().label(f.value(idx))
                        )));
                    }
                    self.covered[idx] = true;
                }
            }
        }
        self.entries.push(entry);
        Ok(())
    }

    /// One step of the representation: locate the first unclaimed profile
    /// valued off the default, freeze its pair-indifferent voters, attach
    /// the committee of the restriction (or a degenerate family when the
    /// restriction is one-sided), verify, and claim. `Ok(None)` means every
    /// remaining profile already carries the default.
    pub fn next_entry(
        &mut self,
        f: &ScfTable,
        a: Alternative,
        b: Alternative,
        x: Alternative,
    ) -> Result<Option<ExtendedCommittee>> {
        let space = f.space();
        let Some(eta) = self
            .enumeration
            .iter()
            .position(|&idx| !self.covered[idx] && f.value(idx) != x)
        else {
            return Ok(None);
        };
        let q_index = self.enumeration[eta];
        let q = space.profile(q_index);
        let y = f.value(q_index);
        if y != a && y != b {
            return Err(Error::domain("table value outside the pair"));
        }
        let frozen = indifference_set(&q, a, b)?;
        let pi_beta = q.restrict(frozen);
        let carrier = frozen.complement_within(space.num_voters());

        // The family: one-sided when the restriction can never reach the
        // opposite value (in particular when every voter is frozen), the
        // extracted committee of the restriction otherwise. The one-sided
        // family is the power set for y = a and the empty family for y = b,
        // so that the active class is the one matching y.
        let opposite = if y == a { b } else { a };
        let family = if carrier.is_empty() {
            one_sided_family(carrier, y, a)
        } else {
            let g = restrict_scf(f, &pi_beta)?;
            if g.range().contains(&opposite) {
                let compact = extract_base_committee(&g, a, b)?;
                lift_committee(&compact, carrier)?
            } else {
                one_sided_family(carrier, y, a)
            }
        };

        let entry = ExtendedCommittee::new(pi_beta, family, a, b)?;
        if !entry.in_class(&q, a, b, y)? {
            return Err(Error::not_csp(format!(
                "profile P#{q_index} {} escapes the entry grown from it",
                format_profile_inline(&q, space)
            )));
        }
        let alpha = self.entries.len();
        if alpha > eta {
            return Err(Error::not_csp(format!(
                "entry ordinal {alpha} exceeds the enumeration position {eta}"
            )));
        }
        if let Some(&last) = self.eta_history.last() {
            if eta <= last {
                return Err(Error::not_csp(format!(
                    "enumeration position {eta} does not advance past {last}"
                )));
            }
        }
        self.push_entry(f, a, b, entry.clone())?;
        debug_assert!(self.covered[q_index]);
        self.eta_history.push(eta);
        Ok(Some(entry))
    }
}

fn one_sided_family(carrier: VoterSet, y: Alternative, a: Alternative) -> Committee {
    if y == a {
        Committee::power_set(carrier)
    } else {
        Committee::empty(carrier)
    }
}

/// Re-homes a committee extracted over the compact sub-society onto the
/// global voter ids of `carrier` (ascending position `j` maps to the `j`-th
/// voter of the carrier).
fn lift_committee(compact: &Committee, carrier: VoterSet) -> Result<Committee> {
    let free_voters: Vec<Voter> = carrier.voters().collect();
    if compact.carrier() != VoterSet::full(free_voters.len()) {
        return Err(Error::domain(
            "compact committee does not match the carrier",
        ));
    }
    let members = compact
        .members()
        .iter()
        .map(|m| VoterSet::from_voters(m.voters().map(|cv| free_voters[cv.index()])))
        .collect();
    Committee::new(carrier, members)
}

/// Represents `f` as a sequential committee spec with default `x = f(π)`,
/// where `π` is the chosen (or the all-indifferent) unanimity profile.
/// Strategy-proofness is pre-verified through the dominance scan; the
/// returned spec evaluates to `f` on every profile.
pub fn decompose(
    f: &ScfTable,
    a: Alternative,
    b: Alternative,
    pi_choice: Option<&Profile>,
) -> Result<PsiSpec> {
    check_pair_range(f, a, b)?;
    let space = f.space();
    let pi = match pi_choice {
        Some(p) => {
            if indifference_set(p, a, b)? != space.full_set() {
                return Err(Error::domain(
                    "chosen profile must tie the pair for every voter",
                ));
            }
            p.clone()
        }
        None => space.designated_indifference_profile(),
    };
    let pi_index = space.index_of(&pi)?;
    let x = f.value(pi_index);

    if let Some((p, q)) = compatibility_witness(f, a, b)? {
        return Err(Error::not_csp(format!(
            "profile P#{p} dominates P#{q} toward the winner yet the values differ",
        )));
    }

    let mut state = DecompositionState::new(f, pi_index)?;
    let base = extract_base_committee(f, a, b)?;
    let entry0 = ExtendedCommittee::new(PartialProfile::empty(space.num_voters()), base, a, b)?;
    state.push_entry(f, a, b, entry0)?;
    while state.next_entry(f, a, b, x)?.is_some() {
        assert!(state.entries().len() <= space.num_profiles() + 1);
    }
    PsiSpec::new(f.space_arc(), a, b, x, state.into_entries())
}
