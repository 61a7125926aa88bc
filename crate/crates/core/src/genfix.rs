//! Seeded random games and fixed example games.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::game::{
    default_names, Coalition, CoalitionStructure, DiversityBounds, DiversityGame, Game, PlayerId,
};
use crate::scalar::{int, Scalar};
use crate::transform::game_from_dividends;

/// Parameters for [`random_game`]. Blocks are consecutive runs of players named `1..=n`.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSpec {
    pub block_sizes: Vec<usize>,
    pub d: Vec<usize>,
    /// Probability that a candidate coalition receives a nonzero dividend.
    pub density: f64,
    /// Dividends are drawn uniformly from `{−range, …, −1, 1, …, range}`.
    pub range: i64,
    pub diverse_only: bool,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(block_sizes: Vec<usize>, d: Vec<usize>) -> Self {
        GeneratorSpec {
            block_sizes,
            d,
            density: 0.5,
            range: 5,
            diverse_only: false,
            seed: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.block_sizes.iter().sum()
    }

    fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.density) {
            return Err(Error::InvalidSpec(format!(
                "density {} outside [0, 1]",
                self.density
            )));
        }
        if self.range < 1 {
            return Err(Error::InvalidSpec(format!(
                "range {} must be at least 1",
                self.range
            )));
        }
        if self.block_sizes.contains(&0) {
            return Err(Error::InvalidSpec("block sizes must be positive".into()));
        }
        Ok(())
    }
}

pub(crate) fn nonzero_integer<R: Rng>(rng: &mut R, range: i64) -> Scalar {
    let magnitude = rng.gen_range(1..=range);
    int(if rng.gen_bool(0.5) {
        magnitude
    } else {
        -magnitude
    })
}

/// Samples integer dividends on the coalitions of `template`'s players and synthesizes
/// the game.
pub(crate) fn sample_game<R: Rng>(
    template: &DiversityGame,
    density: f64,
    range: i64,
    diverse_only: bool,
    rng: &mut R,
) -> Game {
    let n = template.n();
    let mut terms = Vec::new();
    for t in Coalition::all(n).skip(1) {
        if diverse_only && !template.is_diverse(t) {
            continue;
        }
        if rng.gen_bool(density) {
            terms.push((t, nonzero_integer(rng, range)));
        }
    }
    game_from_dividends(template.game().names().to_vec(), terms).expect("coalitions fit")
}

pub fn random_game(spec: &GeneratorSpec) -> Result<DiversityGame> {
    spec.validate()?;
    let structure = CoalitionStructure::from_sizes(&spec.block_sizes)
        .map_err(|e| Error::InvalidSpec(e.to_string()))?;
    let zero = Game::zero(default_names(spec.n()))?;
    let template = DiversityGame::new(zero, structure, DiversityBounds::new(spec.d.clone()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let v = sample_game(
        &template,
        spec.density,
        spec.range,
        spec.diverse_only,
        &mut rng,
    );
    template.with_game(v)
}

/// A game agreeing with `g`'s worths on every diverse coalition and shifted by a nonzero
/// integer on every nonempty non-diverse one.
pub fn perturb_nondiverse(g: &DiversityGame, seed: u64) -> Game {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    perturb_with(g, &mut rng)
}

pub(crate) fn perturb_with<R: Rng>(g: &DiversityGame, rng: &mut R) -> Game {
    let v = g.game();
    let table = Coalition::all(v.n())
        .map(|s| {
            if s.is_empty() || g.is_diverse(s) {
                v.worth(s).clone()
            } else {
                v.worth(s) + nonzero_integer(rng, 5)
            }
        })
        .collect();
    Game::from_table_unchecked(v.names().to_vec(), table)
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn coalition(game_names: &[String], members: &[&str]) -> Coalition {
    Coalition::from_players(members.iter().map(|m| {
        game_names
            .iter()
            .position(|x| x == m)
            .expect("fixture names are fixed")
    }))
}

/// Four players `i, j, k, l` in blocks `{i, j}`, `{k, l}` with `d = (1, 1)`,
/// `v = 1·u_{ik} + 2·u_{jl}`, and the two auxiliary games of the argument.
#[derive(Debug, Clone)]
pub struct Counterexample1 {
    pub game: DiversityGame,
    /// `Δ_{ik}·u_{ik} + Δ_{ik}·u_{jl}`
    pub w: Game,
    /// `Δ_{jl}·u_{jl} + Δ_{jl}·u_{il}`
    pub w_prime: Game,
}

pub const CE1_DIVIDENDS: (i64, i64) = (1, 2);

pub fn counterexample1() -> Counterexample1 {
    let ns = names(&["i", "j", "k", "l"]);
    let c = |m: &[&str]| coalition(&ns, m);
    let (ik, jl) = (int(CE1_DIVIDENDS.0), int(CE1_DIVIDENDS.1));
    let v = game_from_dividends(
        ns.clone(),
        [(c(&["i", "k"]), ik.clone()), (c(&["j", "l"]), jl.clone())],
    )
    .expect("fixture");
    let w = game_from_dividends(
        ns.clone(),
        [(c(&["i", "k"]), ik.clone()), (c(&["j", "l"]), ik)],
    )
    .expect("fixture");
    let w_prime = game_from_dividends(
        ns.clone(),
        [(c(&["j", "l"]), jl.clone()), (c(&["i", "l"]), jl)],
    )
    .expect("fixture");
    let structure =
        CoalitionStructure::new(4, vec![c(&["i", "j"]), c(&["k", "l"])]).expect("fixture");
    let game = DiversityGame::new(v, structure, DiversityBounds::new(vec![1, 1])).expect("fixture");
    Counterexample1 { game, w, w_prime }
}

/// Four players in blocks `{i, j, k}`, `{l}` with `d = (1, 1)` and
/// `v = u_{i} + u_{jkl}`.
#[derive(Debug, Clone)]
pub struct Counterexample2 {
    pub game: DiversityGame,
    /// Same-block pairs that are symmetric in `v`.
    pub symmetric_pairs: Vec<(PlayerId, PlayerId)>,
}

pub fn counterexample2() -> Counterexample2 {
    let ns = names(&["i", "j", "k", "l"]);
    let c = |m: &[&str]| coalition(&ns, m);
    let v = game_from_dividends(
        ns.clone(),
        [(c(&["i"]), int(1)), (c(&["j", "k", "l"]), int(1))],
    )
    .expect("fixture");
    let structure =
        CoalitionStructure::new(4, vec![c(&["i", "j", "k"]), c(&["l"])]).expect("fixture");
    let game = DiversityGame::new(v, structure, DiversityBounds::new(vec![1, 1])).expect("fixture");
    let symmetric_pairs = symmetric_pairs(&game);
    Counterexample2 {
        game,
        symmetric_pairs,
    }
}

/// Every same-block pair `(i, j)`, `i < j`, symmetric in the game's worths.
pub fn symmetric_pairs(g: &DiversityGame) -> Vec<(PlayerId, PlayerId)> {
    let mut out = Vec::new();
    for b in g.structure().blocks() {
        let members: Vec<PlayerId> = b.players().collect();
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                if g.game().are_symmetric(i, j) == Ok(true) {
                    out.push((i, j));
                }
            }
        }
    }
    out
}

/// `u_{3}` on players `1, 2, 3` with blocks `{1, 2}`, `{3}` and `d = (1, 1)`: the dictator
/// of the raw game has to share once non-diverse coalitions are zeroed out.
pub fn restricted_dictator() -> DiversityGame {
    let structure = CoalitionStructure::new(
        3,
        vec![Coalition::from_mask(0b011), Coalition::from_mask(0b100)],
    )
    .expect("fixture");
    DiversityGame::new(
        Game::unanimity(3, Coalition::from_mask(0b100)).expect("fixture"),
        structure,
        DiversityBounds::new(vec![1, 1]),
    )
    .expect("fixture")
}

/// Block `{1, 2, 3}` whose support traces are exactly `{1}` and `{2, 3}`:
/// `v = u_{14} + 3·u_{234}` with blocks `{1, 2, 3}`, `{4}` and `d = (1, 1)`.
pub fn split_block() -> DiversityGame {
    let v = game_from_dividends(
        default_names(4),
        [
            (Coalition::from_mask(0b1001), int(1)),
            (Coalition::from_mask(0b1110), int(3)),
        ],
    )
    .expect("fixture");
    let structure = CoalitionStructure::new(
        4,
        vec![Coalition::from_mask(0b0111), Coalition::from_mask(0b1000)],
    )
    .expect("fixture");
    DiversityGame::new(v, structure, DiversityBounds::new(vec![1, 1])).expect("fixture")
}

pub const FIXTURE_NAMES: [&str; 4] = [
    "counterexample1",
    "counterexample2",
    "restricted-dictator",
    "split-block",
];

pub fn fixture_by_name(name: &str) -> Result<DiversityGame> {
    match name {
        "counterexample1" => Ok(counterexample1().game),
        "counterexample2" => Ok(counterexample2().game),
        "restricted-dictator" => Ok(restricted_dictator()),
        "split-block" => Ok(split_block()),
        _ => Err(Error::UnknownFixture(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transform::support;

    #[test]
    fn zero_density_gives_zero_game() {
        let spec = GeneratorSpec {
            density: 0.0,
            ..GeneratorSpec::new(vec![2, 2], vec![1, 1])
        };
        assert!(random_game(&spec).unwrap().game().is_zero());
    }

    #[test]
    fn diverse_only_yields_diverse_games() {
        for seed in 0..20 {
            let spec = GeneratorSpec {
                diverse_only: true,
                seed,
                ..GeneratorSpec::new(vec![2, 3], vec![1, 2])
            };
            assert!(random_game(&spec).unwrap().is_diverse_game());
        }
    }

    #[test]
    fn deterministic_in_seed() {
        let spec = GeneratorSpec {
            seed: 42,
            ..GeneratorSpec::new(vec![3, 2], vec![2, 1])
        };
        assert_eq!(random_game(&spec).unwrap(), random_game(&spec).unwrap());
        let other = GeneratorSpec {
            seed: 43,
            ..spec.clone()
        };
        assert_ne!(random_game(&spec).unwrap(), random_game(&other).unwrap());
    }

    #[test]
    fn invalid_specs() {
        let base = GeneratorSpec::new(vec![2, 2], vec![1, 1]);
        assert!(random_game(&GeneratorSpec {
            density: 1.5,
            ..base.clone()
        })
        .is_err());
        assert!(random_game(&GeneratorSpec {
            range: 0,
            ..base.clone()
        })
        .is_err());
        assert!(random_game(&GeneratorSpec {
            d: vec![3, 1],
            ..base.clone()
        })
        .is_err());
        assert!(random_game(&GeneratorSpec {
            block_sizes: vec![2, 0],
            ..base
        })
        .is_err());
    }

    #[test]
    fn perturbation_keeps_diverse_worths() {
        let g = random_game(&GeneratorSpec {
            seed: 7,
            ..GeneratorSpec::new(vec![2, 2], vec![1, 1])
        })
        .unwrap();
        let w = perturb_nondiverse(&g, 3);
        assert_ne!(&w, g.game());
        let gw = g.with_game(w).unwrap();
        assert_eq!(gw.restrict_to_diverse(), g.restrict_to_diverse());
        assert!(gw.game().worth(Coalition::EMPTY) == &int(0));

        let single = random_game(&GeneratorSpec {
            seed: 7,
            ..GeneratorSpec::new(vec![3], vec![1])
        })
        .unwrap();
        assert_eq!(&perturb_nondiverse(&single, 3), single.game());
    }

    #[test]
    fn counterexample1_claims() {
        let ce = counterexample1();
        let (i, j) = (PlayerId(0), PlayerId(1));
        assert_eq!(ce.w.are_symmetric(i, j), Ok(false));
        assert_eq!(ce.w_prime.are_symmetric(i, j), Ok(true));
        let diff = ce
            .game
            .with_game(ce.game.game().sub(&ce.w_prime).unwrap())
            .unwrap();
        assert_eq!(support(&diff).len(), 2);
        assert_eq!(support(&ce.game).len(), 2);
        assert!(support(&ce.game).universal.is_empty());
    }

    #[test]
    fn counterexample2_claims() {
        let ce = counterexample2();
        let (i, j, k) = (PlayerId(0), PlayerId(1), PlayerId(2));
        assert_eq!(ce.symmetric_pairs, vec![(j, k)]);
        assert_eq!(ce.game.game().are_symmetric(i, j), Ok(false));
        assert!(!ce.game.is_diverse_game());
        assert_eq!(ce.game.out_players(), vec![i, j, k]);
    }

    #[test]
    fn fixture_lookup() {
        for name in FIXTURE_NAMES {
            assert!(fixture_by_name(name).is_ok());
        }
        assert_eq!(
            fixture_by_name("nope"),
            Err(Error::UnknownFixture("nope".into()))
        );
    }
}
