use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use overpartition::bijections::bender_knuth::*;
use overpartition::bijections::paths::*;
use overpartition::bijections::rsk::*;
use overpartition::bijections::super_tableau::*;
use overpartition::border::plane_a_poly;
use overpartition::closedform::gf_max_entry;
use overpartition::enumerate::*;
use overpartition::partition::Entry;
use overpartition::plane::PlaneOverpartition;
use overpartition::validate::Validate;
use overpartition::Partition;

fn check_rsk(m: &BlockMatrix) {
    let (p, q) = rsk_forward(m).unwrap();
    assert!(p.is_valid() && q.is_valid(), "{m:?}");
    assert_eq!(p.shape(), q.shape());
    assert_eq!(occurrence_counts(&p, &q, m.n), matrix_counts(m), "{m:?}");
    assert_eq!(rsk_inverse(&p, &q, m.n).as_ref(), Ok(m));
    let (pt, qt) = rsk_forward(&m.transpose()).unwrap();
    assert_eq!((pt, qt), (q.clone(), p.clone()), "{m:?}");
    assert_eq!(m.is_symmetric(), p == q, "{m:?}");
}

#[test]
fn rsk_exhaustive_size_two() {
    let all = all_block_matrices(2, 2);
    assert_eq!(all.len(), 3usize.pow(8) * 2usize.pow(8));
    for m in &all {
        check_rsk(m);
    }
}

#[test]
fn rsk_random_size_three() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let mut m = BlockMatrix::zero(3);
        for i in 0..3 {
            for j in 0..3 {
                m.a[i][j] = rng.gen_range(0..=2);
                m.b[i][j] = rng.gen_range(0..=1);
                m.c[i][j] = rng.gen_range(0..=1);
                m.d[i][j] = rng.gen_range(0..=2);
            }
        }
        check_rsk(&m);
    }
}

#[test]
fn symmetric_images_give_max_entry_series() {
    let order = 10;
    for n in 1..=3u32 {
        let images: Vec<PlaneOverpartition> = symmetric_block_matrices(n as usize, order as u64)
            .iter()
            .map(|m| rsk_forward(m).unwrap().0)
            .collect();
        let distinct: BTreeSet<String> = images.iter().map(|p| p.to_string()).collect();
        assert_eq!(distinct.len(), images.len());
        let sum = weighted_gf(images.iter(), WeightSpec::AQ, order).unwrap();
        assert_eq!(sum, gf_max_entry(n, order), "n = {n}");
    }
}

#[test]
fn paths_round_trip_small_pops() {
    for pop in enum_pops(&Constraint::All, 6) {
        let x = pop.largest().max(1);
        let paths = pop_to_paths(&pop, x).unwrap();
        let (o, w) = paths.iter().fold((0, 0), |(a, b), p| {
            let (x, y) = p.weight();
            (a + x, b + y)
        });
        assert_eq!((o, w), (pop.overlined_count(), pop.weight()), "{pop}");
        assert_eq!(paths_to_pop(&paths).unwrap(), pop);
    }
}

#[test]
fn bender_knuth_small_shapes() {
    for shape in Partition::all_up_to(4) {
        let tabs = enum_column_strict(&shape, 3);
        for s in &tabs {
            for l in &tabs {
                let pi = bender_knuth(s, l).unwrap();
                assert_eq!(pi.weight() + shape.weight(), s.weight() + l.weight());
                assert_eq!(bender_knuth_inverse(&pi), (s.clone(), l.clone()));
                assert_eq!(pair_a_poly(s, l), Some(plane_a_poly(&pi)), "{s} {l}");
            }
        }
    }
}

#[test]
fn bender_knuth_inverse_covers_plane_partitions() {
    for pi in enum_plane_partitions(4, 4, 8) {
        let (s, l) = bender_knuth_inverse(&pi);
        assert_eq!(bender_knuth(&s, &l).unwrap(), pi);
    }
}

fn fillings(shape: &[usize], alphabet: &[Entry]) -> Vec<Vec<Vec<Entry>>> {
    let cells: usize = shape.iter().sum();
    let mut out = Vec::new();
    let mut idx = vec![0usize; cells];
    loop {
        let mut it = idx.iter();
        out.push(
            shape
                .iter()
                .map(|&len| (0..len).map(|_| alphabet[*it.next().unwrap()]).collect())
                .collect(),
        );
        let mut k = 0;
        loop {
            if k == cells {
                return out;
            }
            idx[k] += 1;
            if idx[k] < alphabet.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

#[test]
fn super_tableaux_of_small_shape() {
    let (k, l) = (2u32, 2u32);
    let alphabet = [
        Entry::plain(1),
        Entry::plain(2),
        Entry::over(1),
        Entry::over(2),
    ];
    let tabs: Vec<SuperTableau> = fillings(&[2, 1], &alphabet)
        .into_iter()
        .filter_map(|rows| SuperTableau::new(rows).ok())
        .collect();
    let pops: Vec<PlaneOverpartition> = fillings(&[2, 1], &alphabet)
        .into_iter()
        .filter_map(|rows| PlaneOverpartition::new(rows).ok())
        .collect();
    let mut images = BTreeSet::new();
    for t in &tabs {
        let pop = super_to_pop(t, k, l).unwrap();
        let relabeled: u64 = t
            .rows()
            .iter()
            .flatten()
            .map(|e| (if e.overlined { l } else { k } + 1 - e.value) as u64)
            .sum();
        assert_eq!(pop.weight(), relabeled);
        assert_eq!(pop.overlined_count(), t.overlined_count());
        assert_eq!(pop.shape(), t.shape());
        images.insert(pop.to_string());
    }
    assert_eq!(images.len(), tabs.len());
    let all: BTreeSet<String> = pops.iter().map(|p| p.to_string()).collect();
    assert_eq!(images, all);
}

#[test]
fn stanley_involution_small_shape() {
    let shape = Partition::new(vec![2, 1]);
    let all = enum_reverse_pops(&shape, 8);
    for n in 0..=4u32 {
        for r in &all {
            let s = stanley_involution(r, n);
            assert!(s.is_valid(), "{r}");
            assert_eq!(stanley_involution(&s, n), *r);
            assert_eq!(s.weight(), r.weight());
            let small = r.cells().iter().flatten().all(|e| e.value <= n);
            assert_eq!(s == *r, small, "{r}");
            if !small {
                assert_eq!((s.overlined_count() + r.overlined_count()) % 2, 1);
            }
        }
    }
}
