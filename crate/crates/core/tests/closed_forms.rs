use std::collections::BTreeSet;

use overpartition::closedform::*;
use overpartition::enumerate::*;
use overpartition::interlacing::{InterlacingSequence, Profile, Topology};
use overpartition::series::geometric;
use overpartition::{border, CoeffPoly, Partition, TruncSeries};

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec())
}

#[test]
fn overpartitions_at_most_and_exactly_k_parts() {
    let n = 10;
    for k in 0..4usize {
        let all = enum_row_overpartitions(n as u32, k, n as u64);
        let oracle = weighted_gf(all.iter(), WeightSpec::AQ, n).unwrap();
        assert_eq!(gf_overpartitions(k as u32, false, n), oracle, "at most {k}");
        let exact: Vec<_> = all.into_iter().filter(|o| o.len() == k).collect();
        let oracle = weighted_gf(exact.iter(), WeightSpec::AQ, n).unwrap();
        assert_eq!(gf_overpartitions(k as u32, true, n), oracle, "exactly {k}");
    }
}

#[test]
fn overpartitions_one_part_by_hand() {
    let one_plus_a = &CoeffPoly::one() + &CoeffPoly::a();
    let g = gf_overpartitions(1, false, 5);
    assert_eq!(g.coeff(0), CoeffPoly::one());
    for k in 1..=5 {
        assert_eq!(g.coeff(k), one_plus_a);
    }
    let g = gf_overpartitions(1, true, 5);
    assert_eq!(g.coeff(0), CoeffPoly::zero());
    assert_eq!(g.coeff(3), one_plus_a);
}

#[test]
fn box_t_matches_plane_partition_oracle() {
    let n = 8;
    for (r, c) in [(1, 1), (1, 2), (2, 2), (2, 3), (3, 3)] {
        let pps = enum_plane_partitions(r, c, n as u64);
        let oracle = weighted_gf(pps.iter(), WeightSpec::TQ, n).unwrap();
        assert_eq!(gf_box_t(r, c, n), oracle, "{r}x{c}");
    }
}

#[test]
fn box_at_minus_one_matches_pop_oracle() {
    let n = 8;
    for (r, c) in [(1, 1), (2, 2), (2, 3), (3, 2)] {
        let oracle = pop_gf(&Constraint::Box(r, c), n).eval_a(1);
        assert_eq!(gf_box(r, c, n), oracle, "{r}x{c}");
    }
    assert_eq!(gf_box(2, 2, 4).coeff(1), CoeffPoly::constant(2));
}

#[test]
fn hook_content_shape_matches_oracle() {
    let n = 9;
    for l in [
        p(&[1]),
        p(&[2]),
        p(&[1, 1]),
        p(&[2, 1]),
        p(&[3, 1]),
        p(&[2, 2]),
        p(&[2, 1, 1]),
    ] {
        let oracle = pop_gf(&Constraint::Shape(l.clone()), n);
        assert_eq!(
            gf_hook_content(&l, HookVariant::Shape, n).unwrap(),
            oracle,
            "{l}"
        );
    }
}

#[test]
fn hook_content_bounded_matches_oracle() {
    let n = 9;
    for l in [
        p(&[1]),
        p(&[2]),
        p(&[1, 1]),
        p(&[2, 1]),
        p(&[3, 1]),
        p(&[2, 2]),
        p(&[2, 1, 1]),
    ] {
        let oracle = pop_gf(&Constraint::BoundedShape(l.clone()), n);
        assert_eq!(
            gf_hook_content(&l, HookVariant::Bounded, n).unwrap(),
            oracle,
            "{l}"
        );
    }
}

#[test]
fn hook_content_equals_determinant() {
    let n = 10;
    for w in 1..=6 {
        for l in Partition::all_of(w) {
            let shape = gf_hook_content(&l, HookVariant::Shape, n).unwrap();
            let det = det_m(&l, false, n).shift(l.weight() as i64).truncate(n);
            assert_eq!(shape, det, "shape {l}");
            let bounded = gf_hook_content(&l, HookVariant::Bounded, n).unwrap();
            assert_eq!(bounded, det_m(&l, true, n), "bounded {l}");
        }
    }
}

#[test]
fn box_as_sum_of_determinants() {
    let n = 7;
    for r in 1..=4 {
        for c in 1..=3 {
            let sum = gf_box_det_sum(r, c, n);
            assert_eq!(sum.eval_a(1), gf_box(r, c, n), "{r}x{c} at a=1");
            assert_eq!(sum, pop_gf(&Constraint::Box(r, c), n), "{r}x{c}");
        }
    }
}

#[test]
fn w_closed_forms_match_pfaffian() {
    let n = 10;
    for l in 0..=4usize {
        for mask in 0u32..64 {
            if mask.count_ones() as usize != l {
                continue;
            }
            let rs: Vec<u32> = (0..6).rev().filter(|i| mask >> i & 1 == 1).collect();
            let pf = w_pfaffian(&rs, n).unwrap();
            assert_eq!(w_gf(&rs, n).unwrap(), pf, "{rs:?}");
            assert_eq!(w_product(&rs, n).unwrap(), pf, "{rs:?}");
        }
    }
}

#[test]
fn w_recursion_drops_trailing_zero() {
    let n = 12;
    for rs in [
        vec![1u32],
        vec![3, 1],
        vec![4, 2, 1],
        vec![5, 3, 2, 1],
        vec![2, 1],
    ] {
        let mut with_zero = rs.clone();
        with_zero.push(0);
        let lowered: Vec<u32> = rs.iter().map(|r| r - 1).collect();
        assert_eq!(
            w_gf(&with_zero, n).unwrap(),
            w_gf(&lowered, n).unwrap(),
            "{rs:?}"
        );
    }
}

#[test]
fn reverse_hook_matches_oracle_and_w() {
    let n = 8;
    for l in [
        p(&[1]),
        p(&[2]),
        p(&[1, 1]),
        p(&[2, 1]),
        p(&[2, 2]),
        p(&[3, 1]),
        p(&[3, 2, 1]),
    ] {
        let rpops = enum_reverse_pops(&l, n as u64);
        let oracle = weighted_gf(rpops.iter(), WeightSpec::AQ, n)
            .unwrap()
            .eval_a(1);
        let hook = gf_reverse_hook(&l, n);
        assert_eq!(hook, oracle, "{l}");
        assert_eq!(hook, w_gf(&shape_tuple(&l), n).unwrap(), "{l}");
    }
    assert_eq!(
        gf_reverse_hook(&p(&[2, 1]), 3).coeff(1),
        CoeffPoly::constant(4)
    );
}

#[test]
fn reverse_hook_first_column_recursion() {
    let n = 10;
    for l in [p(&[2, 1]), p(&[3, 3, 1]), p(&[4, 2, 2])] {
        let mut acc = TruncSeries::one(n);
        for row in l.hooks_and_contents() {
            let h = row[0].0 as i64;
            acc = &(&acc * &TruncSeries::binomial(&CoeffPoly::one(), h, n))
                * &geometric(&CoeffPoly::one(), h, n);
        }
        let rest = Partition::new(
            l.parts()
                .iter()
                .map(|x| x - 1)
                .filter(|&x| x > 0)
                .collect::<Vec<_>>(),
        );
        assert_eq!(
            gf_reverse_hook(&l, n),
            &acc * &gf_reverse_hook(&rest, n),
            "{l}"
        );
    }
}

#[test]
fn reverse_hook_on_rectangle_is_box() {
    let n = 10;
    for (r, c) in [(1, 3), (2, 2), (3, 2)] {
        assert_eq!(
            gf_reverse_hook(&Partition::rectangle(c, r), n),
            gf_box(r, c, n)
        );
    }
}

#[test]
fn all_weighted_matches_oracle() {
    let n = 7;
    let g = gf_all_weighted(n);
    assert_eq!(g, pop_gf(&Constraint::All, n));
    let a = CoeffPoly::a();
    let expected = &(&CoeffPoly::constant(2) + &a.scale(&3.into())) + &(&a * &a);
    assert_eq!(g.coeff(2), expected);
    assert_eq!(g.eval_a(1), gf_plane_overpartitions(n));
}

#[test]
fn max_entry_matches_oracle() {
    let n = 8;
    for m in 0..=3 {
        assert_eq!(
            gf_max_entry(m, n),
            pop_gf(&Constraint::MaxEntry(m), n),
            "n = {m}"
        );
    }
    let a = CoeffPoly::a();
    let one_plus_a = &CoeffPoly::one() + &a;
    assert_eq!(gf_max_entry(1, n).coeff(2), &one_plus_a * &one_plus_a);
}

#[test]
fn parts_in_set_matches_oracle() {
    let n = 8;
    for s in [vec![1u32], vec![2], vec![1, 3], vec![2, 3], vec![1, 2, 5]] {
        let set: BTreeSet<u32> = s.into_iter().collect();
        assert_eq!(
            gf_parts_in_set(&set, n),
            pop_gf(&Constraint::PartsIn(set.clone()), n),
            "{set:?}"
        );
    }
    let all: BTreeSet<u32> = (1..=n as u32).collect();
    assert_eq!(gf_parts_in_set(&all, n), gf_all_weighted(n));
}

#[test]
fn odd_parts_product() {
    let n = 10;
    let odds: BTreeSet<u32> = (1..=n as u32).filter(|x| x % 2 == 1).collect();
    let oracle = pop_gf(&Constraint::PartsIn(odds.clone()), n);
    assert_eq!(gf_odd_parts(n), oracle);
    assert_eq!(gf_parts_in_set(&odds, n), oracle);
}

#[test]
fn odd_parts_with_lagged_exponent_differs_at_q2() {
    // weight 2 with odd parts: 1 1, 1 1̄, 1/1̄, 1̄/1̄
    let lagged = gf_odd_parts_lagged(4);
    let correct = gf_odd_parts(4);
    assert_eq!(correct.first_difference(&lagged), Some(2));
    let one_plus_a = &CoeffPoly::one() + &CoeffPoly::a();
    assert_eq!(correct.coeff(2), &one_plus_a * &one_plus_a);
}

#[test]
fn row_bounded_matches_oracle() {
    let n = 10;
    for m in 0..=3u32 {
        for c in 0..=3usize {
            let rows = enum_row_overpartitions(m, c, n as u64);
            let oracle = weighted_gf(rows.iter(), WeightSpec::AQ, n).unwrap();
            assert_eq!(gf_row_bounded(m, c as u32, n), oracle, "n={m} c={c}");
        }
    }
    let g = gf_row_bounded(1, 1, 5);
    assert_eq!(
        g,
        TruncSeries::from_terms(
            5,
            [
                (0, CoeffPoly::one()),
                (1, &CoeffPoly::one() + &CoeffPoly::a())
            ]
        )
    );
}

#[test]
fn skew_matches_interlacing_oracle() {
    let n = 6;
    for len in 2..=5 {
        for prof in Profile::all_words(len) {
            if prof.bit(0) != 0 || prof.bit(len - 1) != 1 {
                continue;
            }
            let oracle = interlacing_gf(&prof, Topology::Planar, n).unwrap();
            assert_eq!(gf_skew(&prof, n), oracle, "profile {prof}");
        }
    }
}

#[test]
fn skew_of_shape_profile_is_hook_product() {
    let n = 10;
    for l in [p(&[1]), p(&[2, 1]), p(&[3, 1, 1]), p(&[2, 2])] {
        let prof = Profile::of_shape(&l);
        let g = gf_skew(&prof, n);
        assert_eq!(g, gf_skew_hook(&l, n), "{l}");
        assert_eq!(g.eval_t(-1), gf_reverse_hook(&l, n));
        assert_eq!(g.eval_t(0), gf_gansner(&l, n));
    }
    assert_eq!(
        gf_skew(&Profile::rectangle(2, 3), n).eval_t(-1),
        gf_box(2, 3, n)
    );
}

#[test]
fn cylindric_matches_oracle() {
    let n = 6;
    for len in 1..=4 {
        for prof in Profile::all_words(len) {
            let oracle = interlacing_gf(&prof, Topology::Cylindric, n).unwrap();
            assert_eq!(gf_cylindric(&prof, n), oracle, "profile {prof}");
        }
    }
}

#[test]
fn cylindric_period_one_is_partitions() {
    let n = 10;
    let g = gf_cylindric(&Profile::new(vec![1]).unwrap(), n);
    let mut expected = TruncSeries::one(n);
    for k in 1..=n {
        expected = &expected * &geometric(&CoeffPoly::one(), k, n);
    }
    assert_eq!(g, expected);
}

#[test]
fn macmahon_t_matches_plane_partitions() {
    let n = 6;
    let pps = enum_plane_partitions(n as u32, n as u32, n as u64);
    let oracle = weighted_gf(pps.iter(), WeightSpec::TQ, n).unwrap();
    assert_eq!(gf_macmahon_t(n), oracle);
}

#[test]
fn phi_times_b_is_a_for_sequences() {
    for prof in Profile::all_words(3) {
        let mut seqs = Vec::new();
        for start in Partition::all_up_to(4) {
            let mut frontier = vec![vec![start.clone()]];
            for k in 0..3 {
                let mut next = Vec::new();
                for s in frontier {
                    let last = s.last().unwrap().clone();
                    let cands = if prof.bit(k) == 0 {
                        strips_above(&last, 6)
                    } else {
                        strips_below(&last)
                    };
                    for c in cands {
                        let mut t = s.clone();
                        t.push(c);
                        next.push(t);
                    }
                }
                frontier = next;
            }
            seqs.extend(frontier);
        }
        for s in seqs {
            let seq = InterlacingSequence::new(s.clone(), prof.clone(), Topology::Planar).unwrap();
            let lhs = &b_lambda(&s[0]) * &phi_sequence(&seq);
            assert_eq!(lhs, border::sequence_a_poly(&seq), "{seq}");
        }
    }
}

#[test]
fn phi_equals_cylindric_a() {
    for prof in Profile::all_words(3) {
        for seq in enum_interlacing(&prof, Topology::Cylindric, 6).unwrap() {
            assert_eq!(phi_sequence(&seq), border::sequence_a_poly(&seq), "{seq}");
        }
    }
}

#[test]
fn phi_is_multiplicative_and_reverses() {
    let a = InterlacingSequence::new(
        vec![p(&[]), p(&[2]), p(&[1])],
        Profile::new(vec![0, 1]).unwrap(),
        Topology::Planar,
    )
    .unwrap();
    let b = InterlacingSequence::new(
        vec![p(&[1]), p(&[2, 1]), p(&[2, 2, 1])],
        Profile::new(vec![0, 0]).unwrap(),
        Topology::Planar,
    )
    .unwrap();
    let ab = a.concat(&b).unwrap();
    assert_eq!(phi_sequence(&ab), &phi_sequence(&a) * &phi_sequence(&b));
    let rev = ab.reversed();
    let first = &ab.partitions()[0];
    let last = ab.partitions().last().unwrap();
    let lhs = &phi_sequence(&rev) * &b_lambda(last);
    assert_eq!(lhs, &b_lambda(first) * &phi_sequence(&ab));
}

#[test]
fn strip_ratio_identity() {
    for l in Partition::all_up_to(6) {
        for mu in strips_below(&l) {
            let (phi, psi) = hl_strip_polys(&l, &mu);
            assert_eq!(&phi * &b_lambda(&mu), &psi * &b_lambda(&l), "{l}/{mu}");
        }
    }
}

#[test]
fn hall_littlewood_cauchy_identity() {
    assert_eq!(cauchy_sum(2, 3, 4).truncate(8), cauchy_product(2, 3, 4));
}

#[test]
fn q_is_symmetric_in_three_variables() {
    let q = hl_q_bruteforce(&p(&[2, 1]), 3);
    for (e, c) in &q.terms {
        let mut swapped = e.clone();
        swapped.swap(0, 2);
        assert_eq!(q.terms.get(&swapped), Some(c));
    }
}
