//! Minimum test cover over bitmask hyperedges.

/// Elements are `0..n_elems` (at most 64); edges are element masks.
pub(crate) struct Problem {
    n_elems: usize,
    edges: Vec<u64>,
    /// Per element, the set of edges containing it, as a bitset over edges.
    inc: Vec<Vec<u64>>,
    words: usize,
}

#[derive(Debug, PartialEq, Eq)]
pub(crate) enum CoverError {
    /// No edge tells these two elements apart.
    Inseparable(usize, usize),
}

impl Problem {
    pub(crate) fn new(n_elems: usize, edges: Vec<u64>) -> Self {
        assert!(n_elems <= 64);
        let words = edges.len().div_ceil(64).max(1);
        let mut inc = vec![vec![0u64; words]; n_elems];
        for (k, &e) in edges.iter().enumerate() {
            for (u, row) in inc.iter_mut().enumerate() {
                if e >> u & 1 == 1 {
                    row[k / 64] |= 1 << (k % 64);
                }
            }
        }
        Problem { n_elems, edges, inc, words }
    }

    fn separators<'a>(&'a self, u: usize, v: usize, allowed: &'a [u64]) -> impl Iterator<Item = u64> + 'a {
        let (a, b) = (&self.inc[u], &self.inc[v]);
        (0..self.words).map(move |w| (a[w] ^ b[w]) & allowed[w])
    }

    fn check_feasible(&self) -> Result<(), CoverError> {
        let all = vec![u64::MAX; self.words];
        for u in 0..self.n_elems {
            for v in u + 1..self.n_elems {
                if self.separators(u, v, &all).all(|w| w == 0) {
                    return Err(CoverError::Inseparable(u, v));
                }
            }
        }
        Ok(())
    }

    /// Greedy: repeatedly take the edge separating the most still-unseparated
    /// pairs, lowest index on ties.
    pub(crate) fn greedy(&self) -> Result<Vec<usize>, CoverError> {
        self.check_feasible()?;
        let mut classes = initial_classes(self.n_elems);
        let mut chosen = Vec::new();
        while !classes.is_empty() {
            let (best, score) = self
                .edges
                .iter()
                .enumerate()
                .map(|(k, &e)| (k, split_score(&classes, e)))
                .fold((0, 0), |acc, x| if x.1 > acc.1 { x } else { acc });
            assert!(score > 0, "feasible instance left an inseparable pair");
            chosen.push(best);
            classes = refine(&classes, self.edges[best]);
        }
        Ok(chosen)
    }

    /// A minimum cover: iterative deepening below the greedy size.
    pub(crate) fn solve(&self) -> Result<Vec<usize>, CoverError> {
        let greedy = self.greedy()?;
        let classes = initial_classes(self.n_elems);
        let mut search = Search {
            p: self,
            allowed: vec![u64::MAX; self.words],
            chosen: Vec::new(),
        };
        for budget in 0..greedy.len() {
            if search.dfs(&classes, budget) {
                let mut out = search.chosen.clone();
                out.sort_unstable();
                return Ok(out);
            }
        }
        let mut out = greedy;
        out.sort_unstable();
        Ok(out)
    }
}

fn initial_classes(n: usize) -> Vec<u64> {
    if n < 2 {
        Vec::new()
    } else if n == 64 {
        vec![u64::MAX]
    } else {
        vec![(1u64 << n) - 1]
    }
}

/// Splits every class by `e`, keeping only parts that still hold a pair.
fn refine(classes: &[u64], e: u64) -> Vec<u64> {
    let mut out = Vec::with_capacity(classes.len() + 1);
    for &c in classes {
        for part in [c & e, c & !e] {
            if part.count_ones() >= 2 {
                out.push(part);
            }
        }
    }
    out
}

fn split_score(classes: &[u64], e: u64) -> u32 {
    classes
        .iter()
        .map(|&c| (c & e).count_ones() * (c & !e).count_ones())
        .sum()
}

fn ceil_log2(s: u32) -> u32 {
    if s <= 1 {
        0
    } else {
        32 - (s - 1).leading_zeros()
    }
}

struct Search<'a> {
    p: &'a Problem,
    allowed: Vec<u64>,
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn dfs(&mut self, classes: &[u64], budget: usize) -> bool {
        if classes.is_empty() {
            return true;
        }
        if budget == 0 {
            return false;
        }
        let biggest = classes.iter().map(|c| c.count_ones()).max().unwrap_or(0);
        if ceil_log2(biggest) as usize > budget {
            return false;
        }

        // unseparated pairs with their allowed separators
        let words = self.p.words;
        let mut pairs: Vec<(u32, Vec<u64>)> = Vec::new();
        for &c in classes {
            let members: Vec<usize> = (0..self.p.n_elems).filter(|&u| c >> u & 1 == 1).collect();
            for (x, &u) in members.iter().enumerate() {
                for &v in &members[x + 1..] {
                    let sep: Vec<u64> = self.p.separators(u, v, &self.allowed).collect();
                    let cnt: u32 = sep.iter().map(|w| w.count_ones()).sum();
                    if cnt == 0 {
                        return false;
                    }
                    pairs.push((cnt, sep));
                }
            }
        }
        pairs.sort_by_key(|(cnt, _)| *cnt);

        // pairs with pairwise disjoint separator sets each need their own edge
        let mut used = vec![0u64; words];
        let mut packed = 0;
        for (_, sep) in &pairs {
            if sep.iter().zip(&used).all(|(a, b)| a & b == 0) {
                packed += 1;
                for (u, s) in used.iter_mut().zip(sep) {
                    *u |= s;
                }
                if packed > budget {
                    return false;
                }
            }
        }

        let branch = &pairs[0].1;
        let mut cands: Vec<(u32, usize)> = Vec::new();
        for (w, &bits) in branch.iter().enumerate() {
            let mut b = bits;
            while b != 0 {
                let k = w * 64 + b.trailing_zeros() as usize;
                b &= b - 1;
                cands.push((split_score(classes, self.p.edges[k]), k));
            }
        }
        cands.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

        let mut tried = Vec::with_capacity(cands.len());
        let mut found = false;
        for &(_, k) in &cands {
            let next = refine(classes, self.p.edges[k]);
            self.chosen.push(k);
            if self.dfs(&next, budget - 1) {
                found = true;
                break;
            }
            self.chosen.pop();
            // later siblings never use this edge
            self.allowed[k / 64] &= !(1 << (k % 64));
            tried.push(k);
        }
        for k in tried {
            self.allowed[k / 64] |= 1 << (k % 64);
        }
        found
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Smallest test cover by trying every subfamily.
    fn brute(n: usize, edges: &[u64]) -> Option<usize> {
        (0u32..1 << edges.len())
            .filter(|f| {
                let sigs: Vec<u32> = (0..n)
                    .map(|u| {
                        (0..edges.len()).filter(|&k| f >> k & 1 == 1 && edges[k] >> u & 1 == 1)
                            .fold(0, |s, k| s | 1 << k)
                    })
                    .collect();
                let mut s = sigs.clone();
                s.sort_unstable();
                s.dedup();
                s.len() == n
            })
            .map(|f| f.count_ones() as usize)
            .min()
    }

    #[test]
    fn interval_edges() {
        // runs on 5 ordered elements, plus a phantom element 5
        let mut edges = Vec::new();
        for lo in 0..5 {
            for hi in lo..5 {
                edges.push(((1u64 << (hi + 1)) - 1) & !((1u64 << lo) - 1));
            }
        }
        let p = Problem::new(6, edges.clone());
        let sol = p.solve().unwrap();
        assert_eq!(sol.len(), 3);
        assert_eq!(Some(3), brute(6, &edges));
    }

    #[test]
    fn inseparable_pair_reported() {
        let p = Problem::new(3, vec![0b001]);
        assert_eq!(p.solve(), Err(CoverError::Inseparable(1, 2)));
    }

    #[test]
    fn matches_brute_force_on_pseudo_random_families() {
        let mut state = 0x2545_f491_4f6c_dd1du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..40 {
            let n = 3 + (next() % 5) as usize;
            let m = 4 + (next() % 9) as usize;
            let edges: Vec<u64> = (0..m).map(|_| next() & ((1 << n) - 1)).collect();
            let p = Problem::new(n, edges.clone());
            match (p.solve(), brute(n, &edges)) {
                (Ok(sol), Some(best)) => assert_eq!(sol.len(), best),
                (Err(_), None) => {}
                (got, want) => panic!("{got:?} vs {want:?}"),
            }
        }
    }
}
