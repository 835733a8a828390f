//! Permutation groups with a deterministic Schreier–Sims stabilizer chain.

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

use super::perm::Permutation;

/// Base `0, 1, …, n-1`; level `i` stores the orbit of point `i` under the
/// strong generators fixing `0..i`, with coset representatives.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    /// Strong generators paired with their level (first moved base point).
    strong: Vec<(usize, Permutation)>,
    /// `transversal[i][β]` maps base point `i` to `β`.
    transversal: Vec<Vec<Option<Permutation>>>,
}

impl StabilizerChain {
    fn new(degree: usize) -> Self {
        let mut chain = StabilizerChain {
            degree,
            strong: Vec::new(),
            transversal: Vec::new(),
        };
        chain.transversal = (0..degree).map(|i| chain.orbit_reps(i)).collect();
        chain
    }

    fn level_gens(&self, level: usize) -> impl Iterator<Item = &Permutation> {
        self.strong
            .iter()
            .filter(move |(l, _)| *l >= level)
            .map(|(_, g)| g)
    }

    fn orbit_reps(&self, level: usize) -> Vec<Option<Permutation>> {
        let mut reps: Vec<Option<Permutation>> = vec![None; self.degree];
        reps[level] = Some(Permutation::identity(self.degree));
        let mut queue = VecDeque::from([level]);
        let gens: Vec<&Permutation> = self.level_gens(level).collect();
        while let Some(b) = queue.pop_front() {
            for g in &gens {
                let c = g.at(b);
                if reps[c].is_none() {
                    reps[c] = Some(g.compose_unchecked(reps[b].as_ref().expect("orbit point")));
                    queue.push_back(c);
                }
            }
        }
        reps
    }

    /// Strips `g` through levels `from..`; returns the residue and the level
    /// where it left the chain (`degree` if it sifted through).
    fn sift(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for level in from..self.degree {
            let b = g.at(level);
            match &self.transversal[level][b] {
                Some(u) => g = u.inverse().compose_unchecked(&g),
                None => return (g, level),
            }
        }
        (g, self.degree)
    }

    /// Adds `g` and restores the chain; returns whether the group grew.
    fn extend(&mut self, g: Permutation) -> bool {
        let (h, level) = self.sift(g, 0);
        if h.is_identity() {
            return false;
        }
        self.strong.push((level, h));
        let mut i = level;
        'outer: loop {
            self.transversal[i] = self.orbit_reps(i);
            let gens: Vec<Permutation> = self.level_gens(i).cloned().collect();
            for beta in 0..self.degree {
                let Some(u) = self.transversal[i][beta].clone() else {
                    continue;
                };
                for s in &gens {
                    let su = s.compose_unchecked(&u);
                    let v = self.transversal[i][su.at(i)]
                        .as_ref()
                        .expect("orbit is closed");
                    let schreier = v.inverse().compose_unchecked(&su);
                    let (res, j) = self.sift(schreier, i + 1);
                    if !res.is_identity() {
                        self.strong.push((j, res));
                        for k in i + 1..=j {
                            self.transversal[k] = self.orbit_reps(k);
                        }
                        i = j;
                        continue 'outer;
                    }
                }
            }
            if i == 0 {
                break;
            }
            i -= 1;
        }
        true
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g.clone(), 0).0.is_identity()
    }

    /// Orbit lengths along the base.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.transversal
            .iter()
            .map(|t| t.iter().filter(|u| u.is_some()).count())
            .collect()
    }

    pub fn order(&self) -> u128 {
        self.orbit_lengths().iter().map(|&l| l as u128).product()
    }

    pub fn strong_generators(&self) -> impl Iterator<Item = &Permutation> {
        self.strong.iter().map(|(_, g)| g)
    }
}

/// A finitely generated permutation group; its chain is built on first use.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabilizerChain>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermGroup {
    /// `group_make`: the degree is taken from the generators.
    pub fn new(generators: Vec<Permutation>) -> Result<Self> {
        let degree = generators
            .first()
            .map(Permutation::degree)
            .ok_or_else(|| Error::InvalidParameter("at least one generator is required".into()))?;
        Self::with_degree(degree, generators)
    }

    /// Allows an empty generator list (the trivial group).
    pub fn with_degree(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidParameter("degree must be positive".into()));
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
        Ok(PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::with_degree(degree, Vec::new()).expect("positive degree")
    }

    pub fn cyclic(n: usize) -> Self {
        let cycle: Vec<usize> = (1..=n).collect();
        let g = Permutation::from_cycles(n, &[&cycle]).expect("valid cycle");
        Self::with_degree(n, vec![g]).expect("positive degree")
    }

    pub fn symmetric(n: usize) -> Self {
        if n < 2 {
            return Self::trivial(n.max(1));
        }
        let cycle: Vec<usize> = (1..=n).collect();
        let gens = vec![
            Permutation::from_cycles(n, &[&[1, 2]]).expect("valid"),
            Permutation::from_cycles(n, &[&cycle]).expect("valid"),
        ];
        Self::with_degree(n, gens).expect("positive degree")
    }

    pub fn alternating(n: usize) -> Self {
        if n < 3 {
            return Self::trivial(n.max(1));
        }
        let long: Vec<usize> = if n % 2 == 1 {
            (1..=n).collect()
        } else {
            (2..=n).collect()
        };
        let gens = vec![
            Permutation::from_cycles(n, &[&[1, 2, 3]]).expect("valid"),
            Permutation::from_cycles(n, &[&long]).expect("valid"),
        ];
        Self::with_degree(n, gens).expect("positive degree")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabilizerChain {
        self.chain.get_or_init(|| {
            let mut c = StabilizerChain::new(self.degree);
            for g in &self.generators {
                c.extend(g.clone());
            }
            c
        })
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain().contains(g)
    }

    /// Orbit of a 1-based point, sorted.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[point - 1] = true;
        let mut queue = VecDeque::from([point - 1]);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = g.at(x);
                if !std::mem::replace(&mut seen[y], true) {
                    queue.push_back(y);
                }
            }
        }
        (0..self.degree)
            .filter(|&i| seen[i])
            .map(|i| i + 1)
            .collect()
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut covered = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 1..=self.degree {
            if !covered[p - 1] {
                let o = self.orbit(p);
                for &q in &o {
                    covered[q - 1] = true;
                }
                out.push(o);
            }
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(1).len() == self.degree
    }

    /// Normal closure of `elements` in `self`.
    pub fn normal_closure(&self, elements: &[Permutation]) -> PermGroup {
        let mut chain = StabilizerChain::new(self.degree);
        let mut gens: Vec<Permutation> = Vec::new();
        let mut queue: VecDeque<Permutation> = elements.iter().cloned().collect();
        while let Some(x) = queue.pop_front() {
            if chain.extend(x.clone()) {
                for g in &self.generators {
                    queue.push_back(g.conjugate(&x).expect("same degree"));
                }
                gens.push(x);
            }
        }
        let group = PermGroup::with_degree(self.degree, gens).expect("same degree");
        let _ = group.chain.set(chain);
        group
    }

    /// The commutator subgroup `[G, G]`.
    pub fn derived_subgroup(&self) -> PermGroup {
        let mut comms = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[..i] {
                let c = a
                    .inverse()
                    .compose_unchecked(&b.inverse())
                    .compose_unchecked(a)
                    .compose_unchecked(b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
    }

    /// Orders along the derived series, ending at 1 or at a perfect group.
    pub fn derived_series_orders(&self) -> Vec<u128> {
        let mut orders = vec![self.order()];
        let mut g = self.clone();
        loop {
            let d = g.derived_subgroup();
            let o = d.order();
            if o == *orders.last().expect("nonempty") {
                break;
            }
            orders.push(o);
            if o == 1 {
                break;
            }
            g = d;
        }
        orders
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series_orders().last() == Some(&1)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    /// `self ⊴ other`: a subgroup closed under conjugation by `other`'s generators.
    pub fn is_normal_in(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other)
            && other.generators.iter().all(|g| {
                self.generators
                    .iter()
                    .all(|n| self.contains(&g.conjugate(n).expect("same degree")))
            })
    }

    pub fn equals(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other) && other.is_subgroup_of(self)
    }
}
