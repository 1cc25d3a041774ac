use mzsv_core::indices::{admissible, coarsenings, compositions, parse_index, render};
use mzsv_core::Index;
use proptest::prelude::*;

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn index_strategy(max_depth: usize, max_part: u32) -> impl Strategy<Value = Index> {
    prop::collection::vec(1..=max_part, 1..=max_depth).prop_map(|p| Index::new(p).unwrap())
}

proptest! {
    #[test]
    fn coarsenings_count_and_weight(ix in index_strategy(8, 6)) {
        let cs = coarsenings(&ix);
        prop_assert_eq!(cs.len(), 1usize << (ix.depth() - 1));
        for c in &cs {
            prop_assert_eq!(c.weight(), ix.weight());
        }
        prop_assert_eq!(&cs[0], &ix);
    }

    #[test]
    fn compositions_are_counted_by_binomials(n in 1u32..=12, k in 1u32..=12) {
        prop_assume!(k <= n);
        let cs = compositions(n, k).unwrap();
        prop_assert_eq!(cs.len() as u64, binomial(n as u64 - 1, k as u64 - 1));
        for c in &cs {
            prop_assert_eq!(c.len(), k as usize);
            prop_assert_eq!(c.iter().sum::<u32>(), n);
        }
    }

    #[test]
    fn render_round_trips(ix in index_strategy(10, 10)) {
        prop_assert_eq!(parse_index(&render(&ix)).unwrap(), ix);
    }
}

#[test]
fn render_round_trips_exhaustively_up_to_weight_10() {
    let mut count = 0;
    for w in 1..=10 {
        for k in 1..=w {
            for parts in compositions(w, k).unwrap() {
                let ix = Index::new(parts).unwrap();
                assert_eq!(parse_index(&render(&ix)).unwrap(), ix);
                count += 1;
            }
        }
    }
    assert_eq!(count, (1 << 10) - 1);
}

#[test]
fn admissibility_rules() {
    let ix = |s: &str| parse_index(s).unwrap();
    assert!(admissible(&ix("1,2"), false));
    assert!(!admissible(&ix("2,1"), false));
    assert!(admissible(&ix("2,1"), true));
    assert!(parse_index("").is_err());
    assert!(parse_index("1,0").is_err());
    assert_eq!(ix("1^2,3,2^2").parts(), &[1, 1, 3, 2, 2]);
}
