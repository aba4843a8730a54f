//! Pairwise dominance between profiles and the compatibility property.
//!
//! Profile `P` dominates `Q` toward a side of the pair when every voter
//! either agrees across the two profiles (literally or in strict pair
//! restriction) or is tied in `P` while supporting that side in `Q`. A
//! two-valued function is compatible when its value survives every
//! dominance move toward it: `P` dominating `Q` toward the chosen value
//! forces the same value at `Q`. Compatibility is equivalent to coalitional
//! strategy-proofness for two-valued functions, and checking it scans
//! ordered profile pairs instead of coalition misreports.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::orders::{Alternative, PairOrder};
use crate::profiles::{equivalence_set, indifference_set, supporters, Profile};
use crate::scf::{check_pair_range, ScfTable};

/// `P` dominates `Q` toward `side` (one of `a`, `b`): the agreement set and
/// the tied-in-`P` supporters of `side` in `Q` cover the society.
pub fn dominates(
    p: &Profile,
    q: &Profile,
    a: Alternative,
    b: Alternative,
    side: Alternative,
) -> Result<bool> {
    let other = if side == a {
        b
    } else if side == b {
        a
    } else {
        return Err(Error::domain("side must be one of the pair"));
    };
    let agree = equivalence_set(p, q, a, b)?;
    let moved = indifference_set(p, a, b)?.intersection(supporters(side, q, other)?);
    let n = p.num_voters();
    Ok(agree.union(moved) == crate::profiles::VoterSet::full(n))
}

/// First ordered pair `(P, Q)` where `P` dominates `Q` toward `f(P)` yet
/// `f(Q)` differs, scanning profiles in enumeration order.
pub fn compatibility_witness(
    f: &ScfTable,
    a: Alternative,
    b: Alternative,
) -> Result<Option<(usize, usize)>> {
    check_pair_range(f, a, b)?;
    let space = f.space();
    let m = space.num_orders();
    let nv = space.num_voters();
    let np = space.num_profiles();

    // Per-order restriction to the pair, then per-order-pair dominance
    // admissibility for each side.
    let rc: Vec<PairOrder> = space
        .orders()
        .iter()
        .map(|w| w.restrict_to_pair(a, b))
        .collect::<Result<_>>()?;
    let mut ok_a = vec![false; m * m];
    let mut ok_b = vec![false; m * m];
    for o1 in 0..m {
        for o2 in 0..m {
            let agree = o1 == o2 || (rc[o1] == rc[o2] && rc[o1] != PairOrder::Tied);
            ok_a[o1 * m + o2] = agree || (rc[o1] == PairOrder::Tied && rc[o2] == PairOrder::Above);
            ok_b[o1 * m + o2] = agree || (rc[o1] == PairOrder::Tied && rc[o2] == PairOrder::Below);
        }
    }

    // Flat per-voter order ranks for every profile.
    let mut ranks = vec![0u8; np * nv];
    {
        let mut digits = vec![0usize; nv];
        for p in 0..np {
            for v in 0..nv {
                ranks[p * nv + v] = digits[v] as u8;
            }
            for v in (0..nv).rev() {
                if digits[v] + 1 < m {
                    digits[v] += 1;
                    digits[v + 1..].iter_mut().for_each(|d| *d = 0);
                    break;
                }
            }
        }
    }

    let a_list: Vec<usize> = (0..np).filter(|&i| f.value(i) == a).collect();
    let b_list: Vec<usize> = (0..np).filter(|&i| f.value(i) == b).collect();

    let witness = (0..np)
        .into_par_iter()
        .filter_map(|p| {
            let (table, opposite) = if f.value(p) == a {
                (&ok_a, &b_list)
            } else {
                (&ok_b, &a_list)
            };
            let rp = &ranks[p * nv..(p + 1) * nv];
            for &q in opposite {
                let rq = &ranks[q * nv..(q + 1) * nv];
                let dominated = (0..nv).all(|v| table[rp[v] as usize * m + rq[v] as usize]);
                if dominated {
                    return Some((p, q));
                }
            }
            None
        })
        .min();
    Ok(witness)
}

/// Whether the value of `f` survives every dominance move toward it.
pub fn is_compatible(f: &ScfTable, a: Alternative, b: Alternative) -> Result<bool> {
    Ok(compatibility_witness(f, a, b)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orders::parse_order;
    use crate::profiles::{ProfileSpace, VoterSet};
    use std::sync::Arc;

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

    #[test]
    fn single_voter_example() {
        let s = space(1, 2);
        let p = profile(&s, &["a~b"]);
        let q = profile(&s, &["a>b"]);
        assert!(dominates(&p, &q, A, B, A).unwrap());
        assert!(!dominates(&p, &q, A, B, B).unwrap());
        assert!(!dominates(&q, &p, A, B, A).unwrap());
        assert!(matches!(
            dominates(&p, &q, A, B, Alternative(5)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn dominance_is_reflexive_and_transitive() {
        for (nv, na) in [(2usize, 2usize), (1, 3)] {
            let s = space(nv, na);
            let profiles: Vec<Profile> = s.profiles().collect();
            for side in [A, B] {
                for p in &profiles {
                    assert!(dominates(p, p, A, B, side).unwrap());
                }
                let mut holds = vec![vec![false; profiles.len()]; profiles.len()];
                for (i, p) in profiles.iter().enumerate() {
                    for (j, q) in profiles.iter().enumerate() {
                        holds[i][j] = dominates(p, q, A, B, side).unwrap();
                    }
                }
                for i in 0..profiles.len() {
                    for j in 0..profiles.len() {
                        if !holds[i][j] {
                            continue;
                        }
                        for (k, &jk) in holds[j].iter().enumerate() {
                            if jk {
                                assert!(holds[i][k], "transitivity at ({i},{j},{k})");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn two_way_dominance_collapses_to_agreement() {
        for (nv, na) in [(2usize, 2usize), (1, 3)] {
            let s = space(nv, na);
            let profiles: Vec<Profile> = s.profiles().collect();
            let full = VoterSet::full(nv);
            for p in &profiles {
                for q in &profiles {
                    let both_sides =
                        dominates(p, q, A, B, A).unwrap() && dominates(p, q, A, B, B).unwrap();
                    let a_mutual =
                        dominates(p, q, A, B, A).unwrap() && dominates(q, p, A, B, A).unwrap();
                    let b_mutual =
                        dominates(p, q, A, B, B).unwrap() && dominates(q, p, A, B, B).unwrap();
                    let agree_everywhere = equivalence_set(p, q, A, B).unwrap() == full;
                    assert_eq!(both_sides, agree_everywhere);
                    assert_eq!(a_mutual, agree_everywhere);
                    assert_eq!(b_mutual, agree_everywhere);
                }
            }
        }
    }

    /// The profile rebuilt from coalition parts dominates the misreport
    /// toward one side and the true profile toward the other.
    #[test]
    fn mixed_profile_dominates_both_sources() {
        let s = space(4, 2);
        let p = profile(&s, &["a>b", "b>a", "b>a", "b>a"]);
        let q = profile(&s, &["a>b", "b>a", "a>b", "a~b"]);
        let r = profile(&s, &["a>b", "b>a", "a~b", "a~b"]);
        assert_eq!(
            equivalence_set(&r, &q, A, B).unwrap(),
            VoterSet::from_mask(0b1011)
        );
        assert_eq!(
            equivalence_set(&r, &p, A, B).unwrap(),
            VoterSet::from_mask(0b0011)
        );
        assert!(dominates(&r, &q, A, B, A).unwrap());
        assert!(dominates(&r, &p, A, B, B).unwrap());
    }

    #[test]
    fn compatibility_examples() {
        let fixture = ScfTable::iia_counterexample();
        assert!(is_compatible(&fixture, A, B).unwrap());

        let s = space(1, 2);
        let anti = ScfTable::new(Arc::clone(&s), vec![A, B, A]).unwrap();
        assert_eq!(compatibility_witness(&anti, A, B).unwrap(), Some((0, 1)));

        let constant = ScfTable::new(s, vec![A, A, A]).unwrap();
        assert!(matches!(
            is_compatible(&constant, A, B),
            Err(Error::Domain(_))
        ));
    }

    /// Definitional scan used to validate the table-driven one.
    fn naive_witness(f: &ScfTable) -> Option<(usize, usize)> {
        let profiles: Vec<Profile> = f.space().profiles().collect();
        for (i, p) in profiles.iter().enumerate() {
            for (j, q) in profiles.iter().enumerate() {
                if f.value(j) != f.value(i) && dominates(p, q, A, B, f.value(i)).unwrap() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    #[test]
    fn fast_scan_matches_definitional_scan() {
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
            assert_eq!(
                compatibility_witness(&f, A, B).unwrap(),
                naive_witness(&f),
                "table {pick:b}"
            );
        }
    }
}
