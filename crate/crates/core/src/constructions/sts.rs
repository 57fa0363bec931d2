//! Steiner triple systems from the Bose (`n = 6k + 3`) and Skolem
//! (`n = 6k + 1`) constructions.
//!
//! Both place points `(x, i)` with `x` in a quasigroup `Q` and `i` in `Z_3`
//! at index `i |Q| + x`; Skolem adds a point at infinity with index `n - 1`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Triangle;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleSystem {
    pub n: usize,
    pub triples: Vec<Triangle>,
}

impl TripleSystem {
    /// Every pair of points lies in exactly one triple.
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        let mut seen = vec![false; n * n];
        for t in &self.triples {
            if t.0[2] >= n {
                return Err(Error::VertexOutOfRange { v: t.0[2], n });
            }
            for (a, b) in t.pairs() {
                if std::mem::replace(&mut seen[a * n + b], true) {
                    return Err(Error::Overlap { u: a, v: b });
                }
            }
        }
        for b in 1..n {
            for a in 0..b {
                if !seen[a * n + b] {
                    return Err(Error::Uncovered { u: a, v: b });
                }
            }
        }
        Ok(())
    }

    /// Removes point `p`. Returns the triples avoiding `p` and the pairs
    /// left behind by triples through `p`, which form a perfect matching on
    /// the other points. Labels are unchanged.
    pub fn delete_point(&self, p: usize) -> (Vec<Triangle>, Vec<(usize, usize)>) {
        let mut kept = Vec::new();
        let mut matching = Vec::new();
        for t in &self.triples {
            if t.0.contains(&p) {
                let rest: Vec<usize> = t.0.iter().copied().filter(|&x| x != p).collect();
                matching.push((rest[0], rest[1]));
            } else {
                kept.push(*t);
            }
        }
        matching.sort_unstable();
        (kept, matching)
    }

    pub fn to_text(&self) -> String {
        self.triples.iter().map(|t| format!("t {t}\n")).collect()
    }
}

pub fn steiner_triple_system(n: usize) -> Result<TripleSystem> {
    let sys = match n % 6 {
        3 => bose(n),
        1 if n >= 7 => skolem(n),
        _ => {
            return Err(Error::Residue {
                n,
                reason: "a Steiner triple system needs n = 1 or 3 (mod 6) and n >= 3".into(),
            })
        }
    };
    sys.validate()?;
    Ok(sys)
}

fn bose(n: usize) -> TripleSystem {
    let q = n / 3; // |Q| = 2k + 1
    let k = (q - 1) / 2;
    // Idempotent commutative quasigroup on Z_q: x o y = (x + y) / 2, and k + 1 inverts 2 mod q.
    let op = |x: usize, y: usize| (x + y) * (k + 1) % q;
    let pt = |x: usize, i: usize| (i % 3) * q + x;
    let mut triples = Vec::with_capacity(n * (n - 1) / 6);
    for x in 0..q {
        triples.push(Triangle::new(pt(x, 0), pt(x, 1), pt(x, 2)));
    }
    for x in 0..q {
        for y in (x + 1)..q {
            for i in 0..3 {
                triples.push(Triangle::new(pt(x, i), pt(y, i), pt(op(x, y), i + 1)));
            }
        }
    }
    triples.sort_unstable();
    TripleSystem { n, triples }
}

fn skolem(n: usize) -> TripleSystem {
    let q = (n - 1) / 3; // |Q| = 2k
    let k = q / 2;
    // Half-idempotent commutative quasigroup on Z_2k: with s = x + y mod 2k,
    // even s maps to s/2 and odd s to k + (s - 1)/2, so x o x = (x + k) o (x + k) = x for x < k.
    let op = |x: usize, y: usize| {
        let s = (x + y) % q;
        if s % 2 == 0 {
            s / 2
        } else {
            k + (s - 1) / 2
        }
    };
    let pt = |x: usize, i: usize| (i % 3) * q + x;
    let inf = n - 1;
    let mut triples = Vec::with_capacity(n * (n - 1) / 6);
    for x in 0..k {
        triples.push(Triangle::new(pt(x, 0), pt(x, 1), pt(x, 2)));
        for i in 0..3 {
            triples.push(Triangle::new(inf, pt(x + k, i), pt(x, i + 1)));
        }
    }
    for x in 0..q {
        for y in (x + 1)..q {
            for i in 0..3 {
                triples.push(Triangle::new(pt(x, i), pt(y, i), pt(op(x, y), i + 1)));
            }
        }
    }
    triples.sort_unstable();
    TripleSystem { n, triples }
}
