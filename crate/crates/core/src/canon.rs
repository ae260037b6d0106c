//! Canonical labelling and automorphism counting for flag graphs by colour
//! refinement and individualization, with orbit pruning.
//!
//! A colouring assigns each flag a colour in `0..k`. Refinement splits
//! colours by (own colour, colour of the partner flag, multiset of colours at
//! the flag's vertex) until stable. Colours are ranks of sorted keys, so equal
//! inputs up to isomorphism give equal outputs.

use std::cmp::Ordering;
use std::fmt;

use crate::graph::Graph;

/// Byte string identifying an isomorphism class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

type Colours = Vec<u32>;

struct Search<'a> {
    g: &'a Graph,
    labels: &'a [u32],
    best: Option<Vec<u32>>,
    aut: u128,
}

/// Canonical form and automorphism group order of `g`, where flags must keep
/// their `labels` (0 for unlabelled flags).
pub(crate) fn canonical(g: &Graph, labels: &[u32]) -> (CanonicalForm, u128) {
    let mut s = Search {
        g,
        labels,
        best: None,
        aut: 1,
    };
    let start = s.refine(s.initial());
    s.search(start, true);
    let cert = s.best.take().unwrap_or_default();
    let mut bytes = Vec::with_capacity(cert.len() * 4);
    for x in cert {
        bytes.extend_from_slice(&x.to_le_bytes());
    }
    (CanonicalForm(bytes), s.aut)
}

fn rank<K: Ord + Clone>(keys: &[K]) -> Colours {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).expect("key present") as u32)
        .collect()
}

fn class_count(c: &Colours) -> usize {
    c.iter().max().map_or(0, |&m| m as usize + 1)
}

impl<'a> Search<'a> {
    fn initial(&self) -> Colours {
        let g = self.g;
        let keys: Vec<(u32, bool, u32, usize, bool)> = (0..g.flag_count())
            .map(|f| {
                let v = g.vertex_of(f);
                let s = g.sigma(f);
                (
                    self.labels[f],
                    s == f,
                    g.genus_label(v),
                    g.vertex_flags(v).len(),
                    s != f && g.vertex_of(s) == v,
                )
            })
            .collect();
        rank(&keys)
    }

    fn refine(&self, mut c: Colours) -> Colours {
        let g = self.g;
        loop {
            let before = class_count(&c);
            let vsig: Vec<Vec<u32>> = g
                .vertices()
                .iter()
                .map(|fl| {
                    let mut s: Vec<u32> = fl.iter().map(|&f| c[f]).collect();
                    s.sort_unstable();
                    s
                })
                .collect();
            let keys: Vec<(u32, u32, &Vec<u32>)> = (0..g.flag_count())
                .map(|f| (c[f], c[g.sigma(f)], &vsig[g.vertex_of(f)]))
                .collect();
            c = rank(&keys);
            if class_count(&c) == before {
                return c;
            }
        }
    }

    fn individualize(&self, c: &Colours, x: usize) -> Colours {
        let keys: Vec<(u32, bool)> = (0..c.len()).map(|f| (c[f], f != x)).collect();
        self.refine(rank(&keys))
    }

    /// Smallest colour class with more than one flag.
    fn target_cell(c: &Colours) -> Option<Vec<usize>> {
        let k = class_count(c);
        let mut sizes = vec![0usize; k];
        for &x in c {
            sizes[x as usize] += 1;
        }
        let colour = sizes.iter().position(|&s| s > 1)? as u32;
        Some((0..c.len()).filter(|&f| c[f] == colour).collect())
    }

    fn certificate(&self, c: &Colours) -> Vec<u32> {
        let g = self.g;
        let n = g.flag_count();
        let mut at = vec![0usize; n];
        for f in 0..n {
            at[c[f] as usize] = f;
        }
        let mut cert = vec![n as u32, g.vertex_count() as u32];
        cert.extend((0..n).map(|i| c[g.sigma(at[i])]));
        cert.extend((0..n).map(|i| self.labels[at[i]]));
        let mut verts: Vec<Vec<u32>> = g
            .vertices()
            .iter()
            .enumerate()
            .map(|(v, fl)| {
                let mut d = vec![g.genus_label(v), fl.len() as u32];
                let mut pos: Vec<u32> = fl.iter().map(|&f| c[f]).collect();
                pos.sort_unstable();
                d.extend(pos);
                d
            })
            .collect();
        verts.sort();
        cert.extend(verts.into_iter().flatten());
        cert
    }

    fn is_automorphism(&self, phi: &[usize]) -> bool {
        let g = self.g;
        for f in 0..phi.len() {
            if g.sigma(phi[f]) != phi[g.sigma(f)] || self.labels[phi[f]] != self.labels[f] {
                return false;
            }
        }
        for (v, fl) in g.vertices().iter().enumerate() {
            let Some(&first) = fl.first() else { continue };
            let w = g.vertex_of(phi[first]);
            if g.genus_label(w) != g.genus_label(v)
                || g.vertex_flags(w).len() != fl.len()
                || fl.iter().any(|&f| g.vertex_of(phi[f]) != w)
            {
                return false;
            }
        }
        true
    }

    /// Is there an automorphism carrying colouring `a` to colouring `b`?
    fn isomorphic(&self, a: &Colours, b: &Colours) -> bool {
        let mut ca = a.clone();
        let mut cb = b.clone();
        ca.sort_unstable();
        cb.sort_unstable();
        if ca != cb {
            return false;
        }
        match Self::target_cell(a) {
            None => {
                let n = a.len();
                let mut at_b = vec![0usize; n];
                for f in 0..n {
                    at_b[b[f] as usize] = f;
                }
                let phi: Vec<usize> = (0..n).map(|f| at_b[a[f] as usize]).collect();
                self.is_automorphism(&phi)
            }
            Some(cell) => {
                let u = cell[0];
                let colour = a[u];
                let left = self.individualize(a, u);
                (0..b.len())
                    .filter(|&f| b[f] == colour)
                    .any(|v| self.isomorphic(&left, &self.individualize(b, v)))
            }
        }
    }

    /// Orbits of the colour-preserving automorphisms on `cell`, each listed
    /// with its smallest flag first.
    fn orbits(&self, c: &Colours, cell: &[usize]) -> Vec<Vec<usize>> {
        let mut orbits: Vec<(Colours, Vec<usize>)> = Vec::new();
        for &y in cell {
            let cy = self.individualize(c, y);
            match orbits.iter_mut().find(|(cx, _)| self.isomorphic(cx, &cy)) {
                Some((_, members)) => members.push(y),
                None => orbits.push((cy, vec![y])),
            }
        }
        orbits.into_iter().map(|(_, m)| m).collect()
    }

    fn search(&mut self, c: Colours, first_path: bool) {
        let Some(cell) = Self::target_cell(&c) else {
            let cert = self.certificate(&c);
            let better = match &self.best {
                None => true,
                Some(b) => cert.cmp(b) == Ordering::Less,
            };
            if better {
                self.best = Some(cert);
            }
            return;
        };
        let orbits = self.orbits(&c, &cell);
        if first_path {
            self.aut *= orbits[0].len() as u128;
        }
        for (i, orbit) in orbits.iter().enumerate() {
            let next = self.individualize(&c, orbit[0]);
            self.search(next, first_path && i == 0);
        }
    }
}
