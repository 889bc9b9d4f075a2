use std::collections::BTreeSet;

use proptest::prelude::*;
use qpart_core::bijection::{colored_to_over, over_to_colored, runs};
use qpart_core::partitions::{
    enumerate_2crr, enumerate_d, is_valid_2crr, is_valid_d, Color, ColoredPart, ColoredPartition,
    OverPart, Overpartition,
};

fn over_key(p: &Overpartition) -> Vec<(usize, bool)> {
    p.parts().iter().map(|q| (q.value, q.overlined)).collect()
}

#[test]
fn bijection_onto_d22() {
    for n in 0..=25 {
        let colored = enumerate_2crr(n, 1);
        let images: Vec<Overpartition> = colored
            .iter()
            .map(|p| colored_to_over(p).unwrap())
            .collect();
        let image_set: BTreeSet<_> = images.iter().map(over_key).collect();
        assert_eq!(image_set.len(), colored.len(), "injective at n = {n}");
        let d22: BTreeSet<_> = enumerate_d(2, 2, n).unwrap().iter().map(over_key).collect();
        assert_eq!(image_set, d22, "onto at n = {n}");

        for (p, img) in colored.iter().zip(&images) {
            assert_eq!(img.weight(), n);
            assert!(img.values().eq(p.values()), "value set preserved");
            assert_eq!(&over_to_colored(img).unwrap(), p, "round trip");
        }
    }
}

#[test]
fn inverse_round_trip_from_overpartition_side() {
    for n in 0..=20 {
        for o in enumerate_d(2, 2, n).unwrap() {
            let c = over_to_colored(&o).unwrap();
            assert!(is_valid_2crr(&c));
            assert_eq!(colored_to_over(&c).unwrap(), o);
        }
    }
}

#[test]
fn no_red_one_restricts_to_d21() {
    for n in 0..=25 {
        let images: BTreeSet<_> = enumerate_2crr(n, 1)
            .iter()
            .filter(|p| !p.has_red_one())
            .map(|p| over_key(&colored_to_over(p).unwrap()))
            .collect();
        let d21: BTreeSet<_> = enumerate_d(2, 1, n).unwrap().iter().map(over_key).collect();
        assert_eq!(images, d21, "n = {n}");
    }
    let red_one = ColoredPartition::new(vec![ColoredPart::black(3), ColoredPart::red(1)]).unwrap();
    assert!(colored_to_over(&red_one)
        .unwrap()
        .parts()
        .contains(&OverPart::plain(1)));
}

#[test]
fn colors_alternate_within_runs() {
    for n in 0..=22 {
        for p in enumerate_2crr(n, 1) {
            for w in p.parts().windows(2) {
                if w[0].value == w[1].value + 1 {
                    assert_ne!(w[0].color, w[1].color, "{p}");
                }
            }
        }
    }
}

#[test]
fn forced_overlines_in_d22() {
    for n in 0..=22 {
        for o in enumerate_d(2, 2, n).unwrap() {
            for w in o.parts().windows(2) {
                if w[0].value == w[1].value + 1 {
                    assert!(w[0].overlined, "{o}");
                }
            }
        }
    }
}

#[test]
fn runs_partition_the_value_set() {
    let vals = [12, 11, 9, 7, 6, 5, 1];
    let rs = runs(&vals);
    assert_eq!(rs, vec![vec![12, 11], vec![9], vec![7, 6, 5], vec![1]]);
    assert_eq!(rs.concat(), vals);
}

fn arb_colored() -> impl Strategy<Value = ColoredPartition> {
    prop::collection::btree_set(1usize..60, 0..14).prop_flat_map(|set| {
        let values: Vec<usize> = set.into_iter().rev().collect();
        let n = values.len();
        prop::collection::vec(prop::bool::ANY, n).prop_map(move |bits| {
            // one free bit per run start; colors alternate upward
            let mut parts: Vec<ColoredPart> = Vec::with_capacity(n);
            for idx in (0..n).rev() {
                let v = values[idx];
                let color = match parts.last() {
                    Some(below) if below.value + 1 == v => below.color.other(),
                    _ if bits[idx] => Color::Red,
                    _ => Color::Black,
                };
                parts.push(ColoredPart { value: v, color });
            }
            parts.reverse();
            ColoredPartition::new(parts).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn random_round_trip(p in arb_colored()) {
        prop_assert!(is_valid_2crr(&p));
        let o = colored_to_over(&p).unwrap();
        prop_assert!(is_valid_d(&o, 2, 2).unwrap());
        prop_assert_eq!(o.weight(), p.weight());
        prop_assert_eq!(over_to_colored(&o).unwrap(), p);
    }
}
