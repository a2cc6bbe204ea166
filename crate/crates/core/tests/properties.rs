use orbit_atlas::export::{grassmannian_poset, nilpotent_poset};
use orbit_atlas::grassmann::all_partition_pairs;
use orbit_atlas::*;
use proptest::prelude::*;

fn all_colorings(n: usize) -> Vec<Coloring> {
    (0..3usize.pow(n as u32))
        .map(|mut code| {
            let values: Vec<u8> = (0..n)
                .map(|_| {
                    let v = (code % 3) as u8;
                    code /= 3;
                    v
                })
                .collect();
            Coloring::from_values(&values).unwrap()
        })
        .collect()
}

/// Matches a Black with the next White among the live non-Grey vertices,
/// removing both, until no such adjacent pair is left. `pick` chooses which
/// of the currently available pairs goes first.
fn greedy_max(c: &Coloring, mut pick: impl FnMut(usize) -> usize) -> Involution {
    let mut live: Vec<usize> = (1..=c.n()).filter(|&i| !c.color(i).is_grey()).collect();
    let mut arcs = Vec::new();
    loop {
        let available: Vec<usize> = live
            .windows(2)
            .enumerate()
            .filter(|(_, p)| c.color(p[0]) == Color::Black && c.color(p[1]) == Color::White)
            .map(|(idx, _)| idx)
            .collect();
        if available.is_empty() {
            break;
        }
        let idx = available[pick(available.len())];
        arcs.push((live[idx], live[idx + 1]));
        live.drain(idx..idx + 2);
    }
    Involution::from_arcs(c.n(), &arcs).unwrap()
}

#[test]
fn greedy_matching_finds_the_open_orbit() {
    for n in 1..=8 {
        for c in all_colorings(n) {
            let expected = max_orbit_involution(&c).into_involution();
            assert_eq!(greedy_max(&c, |_| 0), expected, "{c}");
            assert_eq!(greedy_max(&c, |len| len - 1), expected, "{c}");
        }
    }
}

proptest! {
    #[test]
    fn greedy_order_does_not_matter(
        values in proptest::collection::vec(0u8..3, 1..=8),
        choices in proptest::collection::vec(any::<usize>(), 8),
    ) {
        let c = Coloring::from_values(&values).unwrap();
        let mut step = 0;
        let got = greedy_max(&c, |len| {
            let k = choices[step % choices.len()] % len;
            step += 1;
            k
        });
        prop_assert_eq!(got, max_orbit_involution(&c).into_involution());
    }

    #[test]
    fn conjugation_preserves_the_orbit(idx in 0usize..232, seed in any::<u64>()) {
        let all = enumerate_involutions(7).unwrap();
        let w = &all[idx];
        let x = strict_upper_from_involution(w);
        let y = conjugate(&random_borel(7, seed), &x).unwrap();
        prop_assert!(is_square_zero(&y).unwrap());
        prop_assert_eq!(&identify_orbit(&y).unwrap(), w);
    }
}

#[test]
fn rank_tables_match_matrix_ranks() {
    for n in 1..=6 {
        for w in enumerate_involutions(n).unwrap() {
            let x = strict_upper_from_involution(&w);
            assert_eq!(southwest_rank_table(&x).unwrap(), rank_table(&w));
            assert_eq!(involution_from_rank_table(&rank_table(&w)).unwrap(), w);
        }
    }
}

#[test]
fn closure_order_is_graded_by_dimension() {
    for n in 1..=6 {
        let p = nilpotent_poset(n).unwrap();
        for a in 0..p.len() {
            for b in 0..p.len() {
                if p.lt(a, b) {
                    assert!(orbit_dimension(p.element(a)) < orbit_dimension(p.element(b)));
                }
            }
        }
        assert_eq!(p.minimal().len(), 1);
        assert!(p.element(p.minimal()[0]).is_identity());
    }
}

#[test]
fn maximal_orbits_are_the_noncrossing_perfect_ones() {
    for n in 1..=8 {
        let p = nilpotent_poset(n).unwrap();
        let top = n * n / 4;
        let maximal: Vec<&Involution> = p.maximal().into_iter().map(|i| p.element(i)).collect();
        assert!(maximal.iter().all(|w| orbit_dimension(w) == top));
        if n >= 3 {
            assert!(maximal.len() > 1, "n = {n}");
        }
    }
}

#[test]
fn codimension_reverses_the_restricted_order() {
    for n in 1..=5 {
        for (l, m) in all_partition_pairs(n).unwrap() {
            let p = grassmannian_poset(&l, &m).unwrap();
            for &(a, b) in p.covers() {
                assert!(codimension_d(p.element(a)) > codimension_d(p.element(b)));
            }
            let bound = l.size() + m.size();
            assert!(p.elements().iter().all(|x| codimension_d(x) <= bound));
        }
    }
}

#[test]
fn restricted_rank_statistic_is_a_restriction() {
    // the restricted table never exceeds the full one on the cells it keeps
    for n in 1..=5 {
        for (l, m) in all_partition_pairs(n).unwrap() {
            for cw in enumerate_consistent(&l, &m).unwrap() {
                let full = rank_table(cw.involution());
                let restricted = restricted_rank_table(&cw);
                for i in 1..=n {
                    for j in i..=n {
                        if let Some(r) = restricted.get(i, j) {
                            assert!(r <= full.get(i, j));
                        }
                    }
                }
            }
        }
    }
}
