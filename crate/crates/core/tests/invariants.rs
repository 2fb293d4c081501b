use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use proptest::prelude::*;
use syrt_core::endo::{commutant, generators_on_paths, witness_candidates};
use syrt_core::hecke::{apply_pi, closure, rank};
use syrt_core::qsym::{evaluate_truncated, f_to_m};
use syrt_core::{
    build_action, composition_series, compositions_of, enumerate_syrt, expand_r_in_f,
    witness_sequence, Basis, Composition, PiResult, QSymElement, Syrt,
};

fn composition(max: usize) -> impl Strategy<Value = Composition> {
    (1..=max)
        .prop_flat_map(|n| proptest::collection::vec(any::<bool>(), n - 1).prop_map(move |cuts| (n, cuts)))
        .prop_map(|(n, cuts)| {
            let subset: BTreeSet<usize> = cuts
                .iter()
                .enumerate()
                .filter(|(_, &c)| c)
                .map(|(i, _)| i + 1)
                .collect();
            Composition::from_subset(&subset, n).unwrap()
        })
}

fn shapes_up_to(n: usize) -> Vec<Composition> {
    (1..=n).flat_map(|k| compositions_of(k).unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn subset_round_trip(alpha in composition(12)) {
        let back = Composition::from_subset(&alpha.subset(), alpha.size()).unwrap();
        prop_assert_eq!(back, alpha);
    }

    #[test]
    fn t_sup_is_source_of_e0(alpha in composition(14)) {
        let sup = alpha.t_sup();
        prop_assert!(sup.columns_increasing());
        prop_assert!(syrt_core::is_source(&sup));
        prop_assert_eq!(rank(&sup), 0);
    }

    #[test]
    fn threads_partition_the_diagram(alpha in composition(14)) {
        let cells: BTreeSet<_> = alpha.cells().collect();
        let labelled: BTreeSet<_> = alpha.threads().threads.iter().flatten().copied().collect();
        let count: usize = alpha.threads().threads.iter().map(Vec::len).sum();
        prop_assert_eq!(count, alpha.size());
        prop_assert_eq!(labelled, cells);
    }

    #[test]
    fn pi_moves_respect_descents(alpha in composition(7), pick in any::<prop::sample::Index>()) {
        let all = enumerate_syrt(&alpha).unwrap();
        let t = &all[pick.index(all.len())];
        for i in 1..alpha.size() {
            let fixed = matches!(apply_pi(i, t).unwrap(), PiResult::Fixed(_));
            prop_assert_eq!(fixed, !t.descent_set().contains(&i));
            if let PiResult::Swapped(s) = apply_pi(i, t).unwrap() {
                prop_assert!(s.tableau().validate().is_ok());
                prop_assert_eq!(s.column_signature(), t.column_signature());
            }
        }
    }

    #[test]
    fn rank_routes_agree(alpha in composition(7)) {
        let a = build_action(&alpha).unwrap();
        let bfs = a.ranks().unwrap();
        for (k, t) in a.basis().iter().enumerate() {
            prop_assert_eq!(bfs[k], rank(t));
        }
    }

    #[test]
    fn f_to_m_preserves_evaluation(alpha in composition(6)) {
        let f = expand_r_in_f(&alpha).unwrap();
        let direct = evaluate_truncated(&f, 3).unwrap();
        let via_m = evaluate_truncated(&f_to_m(&f), 3).unwrap();
        prop_assert_eq!(direct, via_m);
    }
}

/// Monomial expansion evaluated as a polynomial must equal the generating
/// function of semistandard fillings, counted here independently: a weakly
/// increasing word in `1..=m` compatible with the descent set.
#[test]
fn fundamental_evaluation_matches_direct_count() {
    let m = 3;
    for alpha in shapes_up_to(5) {
        let n = alpha.size();
        let x = QSymElement::basis_element(Basis::F, alpha.clone());
        let poly = evaluate_truncated(&x, m).unwrap();
        let des = alpha.subset();
        let mut expect: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        let mut word = vec![1usize; n];
        loop {
            let ok = (1..n).all(|i| word[i - 1] <= word[i] && (!des.contains(&i) || word[i - 1] < word[i]));
            if ok {
                let mut e = vec![0u32; m];
                for &v in &word {
                    e[v - 1] += 1;
                }
                *expect.entry(e).or_insert_with(|| BigInt::from(0)) += 1;
            }
            let Some(p) = (0..n).rev().find(|&p| word[p] < m) else { break };
            word[p] += 1;
            for w in &mut word[p + 1..] {
                *w = 1;
            }
        }
        assert_eq!(poly, expect, "{alpha}");
    }
}

#[test]
fn closure_of_source_is_class() {
    for alpha in shapes_up_to(6) {
        let a = build_action(&alpha).unwrap();
        for (members, src) in a.classes().iter().zip(sources_by_class(&a)) {
            let words: BTreeSet<Vec<usize>> =
                members.iter().map(|&k| a.basis()[k].reading_word()).collect();
            assert_eq!(closure(&a.basis()[src]), words, "{alpha}");
        }
    }
}

fn sources_by_class(a: &syrt_core::HeckeAction) -> Vec<usize> {
    let mut s = a.sources();
    s.sort_by_key(|&k| a.class_of(k));
    s
}

#[test]
fn series_is_a_flag_of_submodules() {
    for alpha in shapes_up_to(6) {
        let a = build_action(&alpha).unwrap();
        let f = composition_series(&a).unwrap();
        let mut seen = BTreeSet::new();
        for &k in &f.chain {
            seen.insert(k);
            for i in 1..=a.generator_count() {
                for &j in &seen {
                    if let Some(to) = a.image(i, j) {
                        assert!(seen.contains(&to), "{alpha}: prefix not closed");
                    }
                }
            }
        }
    }
}

/// Class projections are module maps, so the full commutant has dimension at
/// least the number of classes.
#[test]
fn class_projections_commute() {
    for alpha in shapes_up_to(6) {
        let a = build_action(&alpha).unwrap();
        let k = commutant(&a, None).unwrap();
        assert!(k.dim() >= a.classes().len(), "{alpha}");
        let per_class: usize = (0..a.classes().len())
            .map(|c| commutant(&a, Some(c)).unwrap().dim())
            .sum();
        assert!(k.dim() >= per_class, "{alpha}");
    }
}

#[test]
fn witness_properties_hold_for_every_candidate() {
    for alpha in shapes_up_to(7) {
        let a = build_action(&alpha).unwrap();
        let sup = alpha.t_sup();
        let sup_idx = a.basis().iter().position(|t| *t == sup).unwrap();
        let des_sup = sup.descent_set();
        let labels = alpha.threads().labels();
        for t_hat in witness_candidates(&a) {
            let w = witness_sequence(&alpha, &t_hat).unwrap();
            let hat_idx = a.basis().iter().position(|t| *t == t_hat).unwrap();
            let on_paths = generators_on_paths(&a, sup_idx, hat_idx);
            assert!(on_paths.iter().all(|&i| i >= w.epsilon), "{alpha}: label below ε");
            assert!(des_sup.contains(&(w.epsilon - 1)), "{alpha}: ε-1 not a descent");

            let cell = sup.position(w.epsilon).unwrap();
            let thread = labels[&cell];
            let rightmost = alpha.threads().threads[thread]
                .iter()
                .map(|c| c.col)
                .max()
                .unwrap();
            assert_eq!(cell.col, rightmost, "{alpha}: ε not at the end of its thread");

            let moved = t_hat.position(w.epsilon).unwrap();
            assert!(moved.col > cell.col, "{alpha}: ε not moved right");
        }
    }
}

#[test]
fn enumeration_is_deterministic() {
    let alpha: Composition = "2,3,1,2".parse().unwrap();
    let a: Vec<Syrt> = enumerate_syrt(&alpha).unwrap();
    let b: Vec<Syrt> = enumerate_syrt(&alpha).unwrap();
    assert_eq!(a, b);
}

/// Observed, not proven: at this size there are no module maps between
/// distinct classes, and every class has a local endomorphism algebra.
#[test]
fn classes_split_and_are_local_up_to_six() {
    for alpha in shapes_up_to(6) {
        let a = build_action(&alpha).unwrap();
        let full = commutant(&a, None).unwrap().dim();
        let mut sum = 0;
        for c in 0..a.classes().len() {
            let k = commutant(&a, Some(c)).unwrap();
            assert!(k.report().local, "{alpha}: class {c}");
            sum += k.dim();
        }
        assert_eq!(full, sum, "{alpha}");
    }
}
