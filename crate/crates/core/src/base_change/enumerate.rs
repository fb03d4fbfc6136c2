//! Kernel and remainder enumeration over an indexed set of model masks.

use super::elemset::{sort_family, ElemSet};
use super::hitting::Transversals;

/// A finite set of sentences (by model mask) and a target sentence.
pub(crate) struct Problem<'a> {
    pub masks: &'a [u64],
    pub target: u64,
    pub full: u64,
}

impl Problem<'_> {
    pub fn models(&self, s: &ElemSet) -> u64 {
        s.iter().fold(self.full, |m, i| m & self.masks[i])
    }

    pub fn entails(&self, s: &ElemSet) -> bool {
        self.models(s) & !self.target == 0
    }

    fn all(&self) -> ElemSet {
        ElemSet::full(self.masks.len())
    }

    /// Adds elements in index order while the set keeps not entailing.
    fn grow(&self, mut s: ElemSet) -> ElemSet {
        let mut models = self.models(&s);
        for i in 0..self.masks.len() {
            if !s.contains(i) && (models & self.masks[i]) & !self.target != 0 {
                s.insert(i);
                models &= self.masks[i];
            }
        }
        s
    }
}

/// Minimal entailing and maximal non-entailing subsets, in family order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Families {
    pub kernels: Vec<ElemSet>,
    pub remainders: Vec<ElemSet>,
}

fn degenerate(p: &Problem) -> Option<Families> {
    if p.entails(&ElemSet::EMPTY) {
        return Some(Families {
            kernels: vec![ElemSet::EMPTY],
            remainders: vec![],
        });
    }
    if !p.entails(&p.all()) {
        return Some(Families {
            kernels: vec![],
            remainders: vec![p.all()],
        });
    }
    None
}

/// Model masks of every subset, indexed by the subset's bitmask.
pub(crate) fn subset_models(masks: &[u64], full: u64) -> Vec<u64> {
    let m = masks.len();
    assert!(m <= 26, "subset table over {m} elements");
    let mut table = vec![full; 1 << m];
    for s in 1..(1usize << m) {
        let low = s.trailing_zeros() as usize;
        table[s] = table[s & (s - 1)] & masks[low];
    }
    table
}

/// Scans the whole subset lattice.
pub(crate) fn exhaustive(p: &Problem) -> Families {
    if let Some(f) = degenerate(p) {
        return f;
    }
    let m = p.masks.len();
    let entails: Vec<bool> = subset_models(p.masks, p.full)
        .into_iter()
        .map(|models| models & !p.target == 0)
        .collect();
    let mut kernels = Vec::new();
    let mut remainders = Vec::new();
    for s in 0..(1usize << m) {
        if entails[s] {
            if (0..m).all(|i| s >> i & 1 == 0 || !entails[s & !(1 << i)]) {
                kernels.push(ElemSet::from_low_bits(s as u64));
            }
        } else if (0..m).all(|i| s >> i & 1 == 1 || entails[s | 1 << i]) {
            remainders.push(ElemSet::from_low_bits(s as u64));
        }
    }
    sort_family(&mut kernels);
    sort_family(&mut remainders);
    Families { kernels, remainders }
}

/// Dualize-and-advance: alternates between growing a fresh remainder and
/// updating the minimal transversals of the remainder complements. Once every
/// transversal entails the target, the transversals are exactly the kernels.
pub(crate) fn duality(p: &Problem) -> Families {
    if let Some(f) = degenerate(p) {
        return f;
    }
    let all = p.all();
    let mut remainders = Vec::new();
    let mut transversals = Transversals::new();
    loop {
        let seed = transversals.sets().iter().find(|t| !p.entails(t)).copied();
        match seed {
            Some(t) => {
                let r = p.grow(t);
                transversals.add_edge(&all.difference(&r));
                remainders.push(r);
            }
            None => break,
        }
    }
    let mut kernels = transversals.sets().to_vec();
    sort_family(&mut kernels);
    sort_family(&mut remainders);
    Families { kernels, remainders }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn engines_agree_on_random_problems() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..400 {
            let m = rng.gen_range(0..10);
            let masks: Vec<u64> = (0..m).map(|_| rng.gen_range(0..256u64)).collect();
            let target = rng.gen_range(0..256u64);
            let p = Problem {
                masks: &masks,
                target,
                full: 0xff,
            };
            assert_eq!(exhaustive(&p), duality(&p), "{masks:?} {target}");
        }
    }

    #[test]
    fn degenerate_cases() {
        let masks = [0b1100u64, 0b1010];
        let tautology = Problem {
            masks: &masks,
            target: 0xf,
            full: 0xf,
        };
        assert_eq!(exhaustive(&tautology).kernels, vec![ElemSet::EMPTY]);
        assert!(exhaustive(&tautology).remainders.is_empty());
        let unreachable = Problem {
            masks: &masks,
            target: 0b0001,
            full: 0xf,
        };
        assert!(duality(&unreachable).kernels.is_empty());
        assert_eq!(duality(&unreachable).remainders, vec![ElemSet::full(2)]);
    }
}
