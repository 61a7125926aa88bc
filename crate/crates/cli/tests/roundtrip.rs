use dowen_cli::document::{emit_game, emit_game_compact, parse_game};
use dowen_core::genfix::{random_game, GeneratorSpec};
use proptest::prelude::*;

fn specs() -> impl Strategy<Value = GeneratorSpec> {
    prop::collection::vec(1usize..=3, 1..=4)
        .prop_filter("n ≤ 8", |sizes| sizes.iter().sum::<usize>() <= 8)
        .prop_flat_map(|sizes| {
            let d = sizes.iter().map(|&k| 1..=k).collect::<Vec<_>>();
            (
                Just(sizes),
                d,
                0.0f64..=1.0,
                1i64..=20,
                any::<bool>(),
                any::<u64>(),
            )
        })
        .prop_map(
            |(sizes, d, density, range, diverse_only, seed)| GeneratorSpec {
                block_sizes: sizes,
                d,
                density,
                range,
                diverse_only,
                seed,
            },
        )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn emit_then_parse_is_identity(spec in specs()) {
        let g = random_game(&spec).unwrap();
        let text = emit_game(&g);
        let back = parse_game(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(emit_game(&back), text);
        prop_assert_eq!(parse_game(&emit_game_compact(&g)).unwrap(), g);
    }

    #[test]
    fn restricted_games_round_trip(spec in specs()) {
        let g = random_game(&spec).unwrap().restricted();
        prop_assert_eq!(parse_game(&emit_game(&g)).unwrap(), g);
    }
}
