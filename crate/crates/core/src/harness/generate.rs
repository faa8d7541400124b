//! Seeded random clutters.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::clutter::Clutter;
use crate::face::Face;
use crate::{Error, Result};

/// How instances are drawn. Every family first draws the vertex count
/// uniformly from `min_n..=n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// Each `(d+1)`-subset is a circuit with probability `density`.
    UniformRandom,
    /// The complete clutter minus `k` distinct random circuits.
    CompleteMinusK,
    /// Uniform random with `d = 1`.
    Graph,
    /// A tree of cliques on `d+1..=d+3` vertices glued along shared faces
    /// (chordal by construction), then with probability `density` one
    /// random `(d+1)`-subset toggled.
    NearChordal,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    /// Largest vertex count.
    pub n: usize,
    pub d: usize,
    pub density: f64,
    pub seed: u64,
    pub count: usize,
    pub family: Family,
    /// Smallest vertex count; defaults to `d + 1`.
    #[serde(default)]
    pub min_n: Option<usize>,
    /// Circuits removed by [`Family::CompleteMinusK`]; defaults to 1.
    #[serde(default = "one")]
    pub k: usize,
}

fn one() -> usize {
    1
}

impl GenSpec {
    pub fn new(family: Family, n: usize, d: usize, density: f64, seed: u64, count: usize) -> GenSpec {
        GenSpec { n, d, density, seed, count, family, min_n: None, k: 1 }
    }

    pub fn min_n(&self) -> usize {
        self.min_n.unwrap_or(self.d + 1)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidSpec(m));
        if self.n > 64 {
            return bad(format!("n = {} exceeds 64", self.n));
        }
        if !(0.0..=1.0).contains(&self.density) {
            return bad(format!("density {} is outside [0, 1]", self.density));
        }
        if self.min_n() > self.n {
            return bad(format!("min_n = {} exceeds n = {}", self.min_n(), self.n));
        }
        if self.family == Family::Graph && self.d != 1 {
            return bad("the graph family needs d = 1".into());
        }
        Ok(())
    }

    /// The `index`-th instance. Each instance has its own ChaCha stream, so
    /// instances can be produced in any order.
    pub fn instance(&self, index: usize) -> Result<Clutter> {
        self.validate()?;
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index as u64);
        let n = rng.gen_range(self.min_n()..=self.n);
        let vertices = Face::full(n)?;
        let d = self.d;
        match self.family {
            Family::UniformRandom | Family::Graph => {
                let circuits: Vec<Face> = vertices.k_subsets(d + 1).filter(|_| rng.gen_bool(self.density)).collect();
                Clutter::new(vertices, d, circuits)
            }
            Family::CompleteMinusK => {
                let mut all: Vec<Face> = vertices.k_subsets(d + 1).collect();
                all.shuffle(&mut rng);
                let k = self.k.min(all.len());
                Clutter::new(vertices, d, all.into_iter().skip(k))
            }
            Family::NearChordal => near_chordal(&mut rng, vertices, d, self.density),
        }
    }

    pub fn generate(&self) -> Result<Vec<Clutter>> {
        self.validate()?;
        (0..self.count).map(|i| self.instance(i)).collect()
    }
}

fn near_chordal(rng: &mut ChaCha8Rng, vertices: Face, d: usize, density: f64) -> Result<Clutter> {
    let n = vertices.len();
    let mut circuits: Vec<Face> = Vec::new();
    if n > d {
        let mut order: Vec<usize> = vertices.iter().collect();
        order.shuffle(rng);
        let first = rng.gen_range(d + 1..=(d + 3).min(n));
        let mut cliques = vec![Face::from_indices(order[..first].iter().copied())?];
        let mut next = first;
        while next < n {
            // glue a new clique onto a d-subset (or more) of an existing one
            let base = *cliques.choose(rng).expect("nonempty");
            let mut shared: Vec<usize> = base.iter().collect();
            shared.shuffle(rng);
            let keep = rng.gen_range(d.min(shared.len())..=shared.len().min(d + 1));
            let fresh = rng.gen_range(1..=(n - next).min(d + 3 - keep).max(1));
            let clique =
                Face::from_indices(shared[..keep].iter().copied().chain(order[next..next + fresh].iter().copied()))?;
            next += fresh;
            cliques.push(clique);
        }
        for k in cliques {
            circuits.extend(k.k_subsets(d + 1));
        }
        circuits.sort_unstable();
        circuits.dedup();
    }
    if rng.gen_bool(density) {
        let all: Vec<Face> = vertices.k_subsets(d + 1).collect();
        if let Some(&f) = all.choose(rng) {
            match circuits.binary_search(&f) {
                Ok(i) => {
                    circuits.remove(i);
                }
                Err(i) => circuits.insert(i, f),
            }
        }
    }
    Clutter::new(vertices, d, circuits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::chordality::is_chordal;

    #[test]
    fn density_extremes() {
        let full = GenSpec { min_n: Some(6), ..GenSpec::new(Family::UniformRandom, 6, 2, 1.0, 3, 4) };
        for c in full.generate().unwrap() {
            assert!(c.is_complete());
            assert_eq!(c.n(), 6);
        }
        for c in GenSpec::new(Family::UniformRandom, 6, 2, 0.0, 3, 4).generate().unwrap() {
            assert!(c.is_empty());
        }
    }

    #[test]
    fn streams_are_reproducible() {
        let spec = GenSpec::new(Family::UniformRandom, 7, 2, 0.5, 11, 20);
        assert_eq!(spec.generate().unwrap(), spec.generate().unwrap());
        assert_eq!(spec.instance(7).unwrap(), spec.generate().unwrap()[7]);
        let other = GenSpec { seed: 12, ..spec.clone() };
        assert_ne!(spec.generate().unwrap(), other.generate().unwrap());
    }

    #[test]
    fn invalid_specs() {
        let mut s = GenSpec::new(Family::UniformRandom, 65, 2, 0.5, 0, 1);
        assert!(matches!(s.validate(), Err(Error::InvalidSpec(_))));
        s.n = 5;
        s.density = 1.5;
        assert!(s.validate().is_err());
        assert!(GenSpec::new(Family::Graph, 5, 2, 0.5, 0, 1).validate().is_err());
        let s = GenSpec { min_n: Some(9), ..GenSpec::new(Family::Graph, 5, 1, 0.5, 0, 1) };
        assert!(s.generate().is_err());
    }

    #[test]
    fn complete_minus_k_sizes() {
        let s = GenSpec { k: 2, min_n: Some(5), ..GenSpec::new(Family::CompleteMinusK, 5, 1, 0.0, 1, 5) };
        for c in s.generate().unwrap() {
            assert_eq!(c.len(), 8);
        }
    }

    #[test]
    fn near_chordal_without_noise_is_chordal() {
        let b = Budget::default();
        for d in 1..=2 {
            for c in GenSpec::new(Family::NearChordal, 7, d, 0.0, 5, 40).generate().unwrap() {
                assert!(is_chordal(&c, &b).unwrap().is_some(), "{c}");
            }
        }
    }

    #[test]
    fn spec_json() {
        let s: GenSpec =
            serde_json::from_str(r#"{"n":7,"d":2,"density":0.4,"seed":1,"count":3,"family":"near-chordal"}"#).unwrap();
        assert_eq!(s.family, Family::NearChordal);
        assert_eq!(s.k, 1);
        assert_eq!(s.min_n(), 3);
    }
}
