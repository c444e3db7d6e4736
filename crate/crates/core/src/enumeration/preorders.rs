use crate::topology::Topology;

/// Streams every topology on `n` labeled points by backtracking over the
/// off-diagonal entries of a reflexive transitive relation.
///
/// Entries are decided in row-major order, "absent" before "present", so
/// the first emitted space is discrete and the last indiscrete.
pub struct PreorderTopologies {
    n: usize,
    /// Off-diagonal pairs in decision order.
    pairs: Vec<(usize, usize)>,
    /// Triples `(a, b, c)` whose three entries are all decided once the
    /// pair at that position is.
    checks: Vec<Vec<(usize, usize, usize)>>,
    rows: Vec<u32>,
    values: Vec<u8>,
    depth: usize,
    started: bool,
    exhausted: bool,
}

impl PreorderTopologies {
    pub(crate) fn new(n: usize) -> Self {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).collect();
        let position = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j)).unwrap();
        let mut checks = vec![Vec::new(); pairs.len()];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if a == b || b == c || a == c {
                        continue;
                    }
                    let last = position(a, b).max(position(b, c)).max(position(a, c));
                    checks[last].push((a, b, c));
                }
            }
        }
        PreorderTopologies {
            n,
            values: vec![0; pairs.len()],
            pairs,
            checks,
            rows: (0..n).map(|x| 1u32 << x).collect(),
            depth: 0,
            started: false,
            exhausted: false,
        }
    }

    fn set(&mut self, pos: usize, value: u8) {
        let (i, j) = self.pairs[pos];
        self.values[pos] = value;
        if value == 1 {
            self.rows[i] |= 1 << j;
        } else {
            self.rows[i] &= !(1 << j);
        }
    }

    fn consistent(&self, pos: usize) -> bool {
        let r = &self.rows;
        self.checks[pos]
            .iter()
            .all(|&(a, b, c)| !(r[a] >> b & 1 == 1 && r[b] >> c & 1 == 1) || r[a] >> c & 1 == 1)
    }

    /// Advances the value at `self.depth`, popping exhausted positions.
    fn bump(&mut self) -> bool {
        loop {
            let d = self.depth;
            if self.values[d] == 0 {
                self.set(d, 1);
                if self.consistent(d) {
                    self.depth = d + 1;
                    return true;
                }
            }
            self.set(d, 0);
            if d == 0 {
                return false;
            }
            self.depth = d - 1;
        }
    }

    fn emit(&self) -> Topology {
        Topology::from_reach_rows(self.n, &self.rows).expect("backtracking keeps the relation a preorder")
    }
}

impl Iterator for PreorderTopologies {
    type Item = Topology;

    fn next(&mut self) -> Option<Topology> {
        if self.exhausted {
            return None;
        }
        let total = self.pairs.len();
        if self.started {
            if total == 0 {
                self.exhausted = true;
                return None;
            }
            self.depth = total - 1;
            if !self.bump() {
                self.exhausted = true;
                return None;
            }
        }
        self.started = true;
        while self.depth < total {
            let d = self.depth;
            self.set(d, 0);
            if self.consistent(d) {
                self.depth += 1;
            } else if !self.bump() {
                self.exhausted = true;
                return None;
            }
        }
        Some(self.emit())
    }
}
