use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Standard graph families with canonical vertex numbering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    /// `K_{1,leaves}` with the centre at index 0.
    Star { leaves: usize },
    CompleteBipartite { a: usize, b: usize },
    Null { n: usize },
    /// Uniform labelled tree drawn from a Prüfer sequence.
    RandomTree { n: usize, seed: u64 },
}

pub fn generate(family: &Family) -> Result<Graph> {
    let bad = |msg: &str| Err(Error::InvalidFamily(format!("{family}: {msg}")));
    match *family {
        Family::Path { n } => {
            if n == 0 {
                return bad("path needs n >= 1");
            }
            Graph::new(n, (1..n).map(|i| (i - 1, i)))
        }
        Family::Cycle { n } => {
            if n < 3 {
                return bad("cycle needs n >= 3");
            }
            Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::Complete { n } => {
            if n == 0 {
                return bad("complete graph needs n >= 1");
            }
            Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        Family::Star { leaves } => {
            if leaves == 0 {
                return bad("star needs at least one leaf");
            }
            Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v)))
        }
        Family::CompleteBipartite { a, b } => {
            if a == 0 || b == 0 {
                return bad("both sides must be nonempty");
            }
            Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
        }
        Family::Null { n } => Graph::null(n),
        Family::RandomTree { n, seed } => {
            if n == 0 {
                return bad("tree needs n >= 1");
            }
            random_tree(n, seed)
        }
    }
}

fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n <= 2 {
        return Graph::new(n, (1..n).map(|i| (0, i)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let prufer: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &prufer {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &prufer {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges)
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Path { n } => write!(f, "P{n}"),
            Family::Cycle { n } => write!(f, "C{n}"),
            Family::Complete { n } => write!(f, "K{n}"),
            Family::Star { leaves } => write!(f, "K1,{leaves}"),
            Family::CompleteBipartite { a, b } => write!(f, "K{a},{b}"),
            Family::Null { n } => write!(f, "N{n}"),
            Family::RandomTree { n, seed } => write!(f, "T{n}#{seed}"),
        }
    }
}

/// Parses `name:params`, e.g. `cycle:6`, `star:4`, `complete_bipartite:2,3`,
/// `random_tree:9,42`.
impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let nums: Vec<u64> = rest
            .split(',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.trim()
                    .parse()
                    .map_err(|_| Error::InvalidFamily(format!("bad number {t:?} in {s:?}")))
            })
            .collect::<Result<_>>()?;
        let want = |k: usize| {
            if nums.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidFamily(format!(
                    "{name} takes {k} parameter(s), got {}",
                    nums.len()
                )))
            }
        };
        let family = match name {
            "path" => {
                want(1)?;
                Family::Path { n: nums[0] as usize }
            }
            "cycle" => {
                want(1)?;
                Family::Cycle { n: nums[0] as usize }
            }
            "complete" => {
                want(1)?;
                Family::Complete { n: nums[0] as usize }
            }
            "star" => {
                want(1)?;
                Family::Star {
                    leaves: nums[0] as usize,
                }
            }
            "complete_bipartite" => {
                want(2)?;
                Family::CompleteBipartite {
                    a: nums[0] as usize,
                    b: nums[1] as usize,
                }
            }
            "null" => {
                want(1)?;
                Family::Null { n: nums[0] as usize }
            }
            "random_tree" => {
                want(2)?;
                Family::RandomTree {
                    n: nums[0] as usize,
                    seed: nums[1],
                }
            }
            other => return Err(Error::InvalidFamily(format!("unknown family {other:?}"))),
        };
        Ok(family)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_degrees(g: &Graph) -> Vec<usize> {
        let mut d = g.degrees();
        d.sort_unstable();
        d
    }

    #[test]
    fn cycle_five() {
        let g = generate(&Family::Cycle { n: 5 }).unwrap();
        assert_eq!((g.order(), g.size()), (5, 5));
        assert!(g.degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn star_four() {
        let g = generate(&Family::Star { leaves: 4 }).unwrap();
        assert_eq!(g.max_degree(), 4);
        assert_eq!(g.degree(0), 4);
        assert_eq!(g.pendant_vertices().len(), 4);
    }

    #[test]
    fn null_seven() {
        let g = generate(&Family::Null { n: 7 }).unwrap();
        assert_eq!((g.order(), g.size()), (7, 0));
        assert_eq!(generate(&Family::Null { n: 0 }).unwrap().order(), 0);
    }

    #[test]
    fn short_cycle_rejected() {
        assert!(generate(&Family::Cycle { n: 2 }).is_err());
        assert!(generate(&Family::Path { n: 0 }).is_err());
    }

    #[test]
    fn degree_sequences_match_closed_forms() {
        for n in 1..=12 {
            let p = generate(&Family::Path { n }).unwrap();
            let mut want = vec![2; n.saturating_sub(2)];
            if n == 1 {
                want = vec![0];
            } else {
                want.splice(0..0, [1, 1]);
            }
            assert_eq!(sorted_degrees(&p), want, "P{n}");

            let k = generate(&Family::Complete { n }).unwrap();
            assert!(k.degrees().iter().all(|&d| d == n - 1));

            let s = generate(&Family::Star { leaves: n }).unwrap();
            let mut want = vec![1; n];
            want.push(n);
            assert_eq!(sorted_degrees(&s), want);

            if n >= 3 {
                let c = generate(&Family::Cycle { n }).unwrap();
                assert!(c.degrees().iter().all(|&d| d == 2));
            }
        }
    }

    #[test]
    fn random_trees_are_trees_and_deterministic() {
        for seed in 0..30 {
            for n in 1..=14 {
                let t = generate(&Family::RandomTree { n, seed }).unwrap();
                assert!(t.is_tree(), "n={n} seed={seed}");
                assert_eq!(t, generate(&Family::RandomTree { n, seed }).unwrap());
            }
        }
    }

    #[test]
    fn parse_family_strings() {
        assert_eq!("cycle:6".parse::<Family>().unwrap(), Family::Cycle { n: 6 });
        assert_eq!(
            "random_tree:9,42".parse::<Family>().unwrap(),
            Family::RandomTree { n: 9, seed: 42 }
        );
        assert!("cycle".parse::<Family>().is_err());
        assert!("wheel:5".parse::<Family>().is_err());
    }
}
