//! Root systems realized in Euclidean space, built from explicit coordinate
//! lists with no reference to Cartan matrices. Coordinates are doubled so the
//! half-integer vectors of `E_8` and `F_4` stay integral.

#![allow(dead_code)]

pub type Vector = Vec<i64>;

pub struct Euclidean {
    pub simple: Vec<Vector>,
    pub roots: Vec<Vector>,
}

fn dot(x: &[i64], y: &[i64]) -> i64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

fn unit(dim: usize, i: usize, scale: i64) -> Vector {
    let mut v = vec![0; dim];
    v[i] = scale;
    v
}

fn combo(dim: usize, terms: &[(usize, i64)]) -> Vector {
    let mut v = vec![0; dim];
    for &(i, c) in terms {
        v[i] += 2 * c;
    }
    v
}

// all ±e_i ± e_j, i < j
fn long_pairs(dim: usize) -> Vec<Vector> {
    let mut out = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            for (s, t) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                out.push(combo(dim, &[(i, s), (j, t)]));
            }
        }
    }
    out
}

fn half_spinors(dim: usize, parity: Option<usize>) -> Vec<Vector> {
    (0..1u32 << dim)
        .filter(|m| parity.is_none_or(|p| m.count_ones() as usize % 2 == p))
        .map(|m| (0..dim).map(|i| if m >> i & 1 == 1 { -1 } else { 1 }).collect())
        .collect()
}

impl Euclidean {
    pub fn new(label: char, rank: usize) -> Euclidean {
        let r = rank;
        match label {
            'A' => {
                let d = r + 1;
                let simple = (0..r).map(|i| combo(d, &[(i, 1), (i + 1, -1)])).collect();
                let mut roots = Vec::new();
                for i in 0..d {
                    for j in 0..d {
                        if i != j {
                            roots.push(combo(d, &[(i, 1), (j, -1)]));
                        }
                    }
                }
                Euclidean { simple, roots }
            }
            'B' | 'C' | 'D' => {
                let mut simple: Vec<Vector> = (0..r - 1).map(|i| combo(r, &[(i, 1), (i + 1, -1)])).collect();
                let mut roots = long_pairs(r);
                match label {
                    'B' => {
                        simple.push(combo(r, &[(r - 1, 1)]));
                        for i in 0..r {
                            roots.push(unit(r, i, 2));
                            roots.push(unit(r, i, -2));
                        }
                    }
                    'C' => {
                        simple.push(combo(r, &[(r - 1, 2)]));
                        for i in 0..r {
                            roots.push(unit(r, i, 4));
                            roots.push(unit(r, i, -4));
                        }
                    }
                    _ => simple.push(combo(r, &[(r - 2, 1), (r - 1, 1)])),
                }
                Euclidean { simple, roots }
            }
            'G' => {
                let simple = vec![combo(3, &[(0, 1), (1, -1)]), combo(3, &[(0, -2), (1, 1), (2, 1)])];
                let mut roots = Vec::new();
                for i in 0..3 {
                    for j in 0..3 {
                        if i != j {
                            roots.push(combo(3, &[(i, 1), (j, -1)]));
                            let k = 3 - i - j;
                            roots.push(combo(3, &[(i, 2), (j, -1), (k, -1)]));
                            roots.push(combo(3, &[(i, -2), (j, 1), (k, 1)]));
                        }
                    }
                }
                roots.sort();
                roots.dedup();
                Euclidean { simple, roots }
            }
            'F' => {
                let simple = vec![
                    combo(4, &[(1, 1), (2, -1)]),
                    combo(4, &[(2, 1), (3, -1)]),
                    combo(4, &[(3, 1)]),
                    vec![1, -1, -1, -1],
                ];
                let mut roots = long_pairs(4);
                for i in 0..4 {
                    roots.push(unit(4, i, 2));
                    roots.push(unit(4, i, -2));
                }
                roots.extend(half_spinors(4, None));
                Euclidean { simple, roots }
            }
            'E' => {
                let mut simple = vec![
                    vec![1, -1, -1, -1, -1, -1, -1, 1],
                    combo(8, &[(0, 1), (1, 1)]),
                ];
                for i in 0..6 {
                    simple.push(combo(8, &[(i + 1, 1), (i, -1)]));
                }
                let mut roots = long_pairs(8);
                roots.extend(half_spinors(8, Some(0)));
                let e8 = Euclidean { simple, roots };
                if r == 8 {
                    return e8;
                }
                // E_7 and E_6 are the roots in the span of the first r simple roots
                let simple: Vec<Vector> = e8.simple[..r].to_vec();
                let roots = e8
                    .roots
                    .iter()
                    .filter(|v| e8.coefficients(v)[r..].iter().all(|&c| c == 0))
                    .cloned()
                    .collect();
                Euclidean { simple, roots }
            }
            _ => panic!("unknown label {label}"),
        }
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    /// Coefficients of `v` over the simple roots (Cramer-free elimination on
    /// the Gram system, exact over the rationals since the result is integral).
    pub fn coefficients(&self, v: &[i64]) -> Vec<i64> {
        let r = self.rank();
        let mut m: Vec<Vec<f64>> = (0..r)
            .map(|i| {
                let mut row: Vec<f64> = (0..r).map(|j| dot(&self.simple[i], &self.simple[j]) as f64).collect();
                row.push(dot(&self.simple[i], v) as f64);
                row
            })
            .collect();
        for col in 0..r {
            let piv = (col..r)
                .max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))
                .unwrap();
            m.swap(col, piv);
            let pivot = m[col].clone();
            for (row, entries) in m.iter_mut().enumerate() {
                if row != col {
                    let f = entries[col] / pivot[col];
                    for (x, p) in entries[col..].iter_mut().zip(&pivot[col..]) {
                        *x -= f * p;
                    }
                }
            }
        }
        (0..r)
            .map(|i| {
                let c = m[i][r] / m[i][i];
                let rounded = c.round();
                assert!((c - rounded).abs() < 1e-9, "non-integral coefficient {c}");
                rounded as i64
            })
            .collect()
    }

    /// Positive roots as coefficient vectors, sorted.
    pub fn positive_roots(&self) -> Vec<Vector> {
        let mut out: Vec<Vector> = self
            .roots
            .iter()
            .map(|v| self.coefficients(v))
            .filter(|c| c.iter().all(|&x| x >= 0))
            .collect();
        out.sort();
        out
    }

    pub fn highest_root(&self) -> Vector {
        self.positive_roots()
            .into_iter()
            .max_by_key(|c| c.iter().sum::<i64>())
            .unwrap()
    }

    /// `⟨α_i, α_j⟩ = 2(α_i, α_j)/(α_j, α_j)`, 1-based.
    pub fn pairing(&self, i: usize, j: usize) -> i64 {
        let (a, b) = (&self.simple[i - 1], &self.simple[j - 1]);
        2 * dot(a, b) / dot(b, b)
    }

    /// `|α|² / |α_short|²`, 1-based.
    pub fn length_ratio(&self, i: usize) -> i64 {
        let short = self.simple.iter().map(|s| dot(s, s)).min().unwrap();
        dot(&self.simple[i - 1], &self.simple[i - 1]) / short
    }
}

/// Every type up to rank 8 as `(label, rank)`.
pub fn all_types() -> Vec<(char, usize)> {
    let mut out = Vec::new();
    for r in 1..=8 {
        out.push(('A', r));
    }
    for r in 2..=8 {
        out.push(('B', r));
        out.push(('C', r));
    }
    for r in 4..=8 {
        out.push(('D', r));
    }
    for r in 6..=8 {
        out.push(('E', r));
    }
    out.push(('F', 4));
    out.push(('G', 2));
    out
}
