//! Exhaustive search for commuting pairs of algebra morphisms with entries
//! drawn from a finite pool.

use num_traits::Zero;
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{Algebra, Element, LinearEndo};
use crate::scalar::{Rational, ScalarValue};

#[derive(Clone, Debug, Error, PartialEq)]
pub enum DiscoveryError {
    #[error("the entry pool is empty")]
    EmptyPool,
    #[error("mask has {found} entries, expected {expected}")]
    MaskShape { expected: usize, found: usize },
    #[error("the algebra has non-rational structure constants")]
    Symbolic,
}

/// Candidate maps: entry `(i, j)` is the coefficient of `e_i` in `L(e_j)`.
#[derive(Clone, Debug)]
pub struct SearchSpace {
    algebra: Algebra,
    pool: Vec<Rational>,
    /// Row-major `n × n`; `false` pins the entry to zero.
    mask: Option<Vec<bool>>,
}

impl SearchSpace {
    pub fn new(algebra: Algebra, pool: Vec<Rational>, mask: Option<Vec<bool>>) -> Result<SearchSpace, DiscoveryError> {
        if pool.is_empty() {
            return Err(DiscoveryError::EmptyPool);
        }
        let n = algebra.dim();
        if let Some(m) = &mask {
            if m.len() != n * n {
                return Err(DiscoveryError::MaskShape {
                    expected: n * n,
                    found: m.len(),
                });
            }
        }
        if !algebra.is_rational() {
            return Err(DiscoveryError::Symbolic);
        }
        let mut dedup: Vec<Rational> = Vec::with_capacity(pool.len());
        for p in pool {
            if !dedup.contains(&p) {
                dedup.push(p);
            }
        }
        Ok(SearchSpace {
            algebra,
            pool: dedup,
            mask,
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn pool(&self) -> &[Rational] {
        &self.pool
    }

    fn allowed(&self, i: usize, j: usize) -> bool {
        self.mask.as_ref().map_or(true, |m| m[i * self.algebra.dim() + j])
    }
}

type Column = Vec<Rational>;

struct Table {
    n: usize,
    /// `c[i][k]` lists `(m, coeff)` with `e_i e_k = Σ coeff e_m`.
    c: Vec<Vec<Vec<(usize, Rational)>>>,
    /// Products `(i, k)` checkable once column `j` is assigned.
    checks: Vec<Vec<(usize, usize)>>,
}

impl Table {
    fn new(a: &Algebra) -> Table {
        let n = a.dim();
        let c: Vec<Vec<Vec<(usize, Rational)>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|k| {
                        a.product_terms(i, k)
                            .iter()
                            .map(|(m, s)| (*m, s.as_rational().expect("rational table")))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let mut checks = vec![Vec::new(); n];
        for i in 0..n {
            for k in 0..n {
                let last = c[i][k].iter().map(|(m, _)| *m).fold(i.max(k), usize::max);
                checks[last].push((i, k));
            }
        }
        Table { n, c, checks }
    }

    fn mul(&self, x: &Column, y: &Column) -> Column {
        let mut out = vec![Rational::zero(); self.n];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (k, yk) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let s = xi * yk;
                for (m, c) in &self.c[i][k] {
                    out[*m] += &s * c;
                }
            }
        }
        out
    }

    /// `L(e_i e_k) = L(e_i) L(e_k)` for every product unlocked by column `j`.
    fn consistent(&self, cols: &[Column], j: usize) -> bool {
        self.checks[j].iter().all(|&(i, k)| {
            let mut lhs = vec![Rational::zero(); self.n];
            for (m, c) in &self.c[i][k] {
                for (r, v) in cols[*m].iter().enumerate() {
                    lhs[r] += c * v;
                }
            }
            lhs == self.mul(&cols[i], &cols[k])
        })
    }
}

/// All pool-valued columns for position `j`, in enumeration order.
fn column_choices(space: &SearchSpace, j: usize) -> Vec<Column> {
    let n = space.algebra.dim();
    let mut out: Vec<Column> = vec![Vec::new()];
    for i in 0..n {
        let values: Vec<Rational> = if space.allowed(i, j) {
            space.pool.clone()
        } else {
            vec![Rational::zero()]
        };
        out = out
            .into_iter()
            .flat_map(|prefix| {
                values.iter().map(move |v| {
                    let mut c = prefix.clone();
                    c.push(v.clone());
                    c
                })
            })
            .collect();
    }
    out
}

fn extend(table: &Table, choices: &[Vec<Column>], cols: &mut Vec<Column>, out: &mut Vec<Vec<Column>>) {
    let j = cols.len();
    if j == table.n {
        out.push(cols.clone());
        return;
    }
    for c in &choices[j] {
        cols.push(c.clone());
        if table.consistent(cols, j) {
            extend(table, choices, cols, out);
        }
        cols.pop();
    }
}

/// Every morphism in the space, in enumeration order.
pub fn enumerate_morphisms(space: &SearchSpace) -> Vec<LinearEndo> {
    let table = Table::new(&space.algebra);
    let n = table.n;
    if n == 0 {
        return vec![LinearEndo::identity(0)];
    }
    let choices: Vec<Vec<Column>> = (0..n).map(|j| column_choices(space, j)).collect();
    let found: Vec<Vec<Vec<Column>>> = choices[0]
        .par_iter()
        .map(|first| {
            let mut cols = vec![first.clone()];
            let mut out = Vec::new();
            if table.consistent(&cols, 0) {
                extend(&table, &choices, &mut cols, &mut out);
            }
            out
        })
        .collect();
    found.into_iter().flatten().map(|cols| to_endo(&cols)).collect()
}

fn to_endo(cols: &[Column]) -> LinearEndo {
    let n = cols.len();
    let columns: Vec<Element> = cols
        .iter()
        .map(|c| Element::from_coords(c.iter().cloned().map(ScalarValue::from_rational).collect()))
        .collect();
    LinearEndo::from_columns(&columns).unwrap_or_else(|_| LinearEndo::zero(n))
}

/// Commuting morphism pairs `(α, β)` in lex order over the enumerated
/// morphisms, truncated to `limit`.
pub fn search_morphism_pairs(space: &SearchSpace, limit: usize) -> Vec<(LinearEndo, LinearEndo)> {
    let morphisms = enumerate_morphisms(space);
    let mut out = Vec::new();
    'outer: for a in &morphisms {
        for b in &morphisms {
            if out.len() >= limit {
                break 'outer;
            }
            let ab = a.compose(b).expect("same dimension");
            let ba = b.compose(a).expect("same dimension");
            if ab == ba {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}
