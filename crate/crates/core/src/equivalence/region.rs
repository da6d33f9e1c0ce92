use std::fmt;

use crate::scalar::Scalar;

/// Rational search grid: every `p/q` with `|p| <= max_num` and
/// `1 <= q <= max_den`, deduplicated. Values are ordered by denominator,
/// then by magnitude with the positive value first, so 0 and 1 come first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchRegion {
    pub max_num: i64,
    pub max_den: i64,
    values: Vec<Scalar>,
}

impl SearchRegion {
    pub fn new(max_num: i64, max_den: i64) -> Self {
        let mut values: Vec<Scalar> = Vec::new();
        for q in 1..=max_den.max(1) {
            for p in 0..=max_num.max(0) {
                for s in [p, -p] {
                    let v = Scalar::ratio(s, q).expect("positive denominator");
                    if !values.contains(&v) {
                        values.push(v);
                    }
                }
            }
        }
        SearchRegion {
            max_num,
            max_den,
            values,
        }
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl Default for SearchRegion {
    fn default() -> Self {
        SearchRegion::new(3, 2)
    }
}

impl fmt::Display for SearchRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "p/q with |p| <= {}, 1 <= q <= {} ({} values)",
            self.max_num,
            self.max_den,
            self.values.len()
        )
    }
}

/// Calls `f` on every tuple of `k` grid values in lexicographic order of
/// grid positions, stopping at the first `Some`.
pub fn for_each_tuple<R>(
    values: &[Scalar],
    k: usize,
    mut f: impl FnMut(&[Scalar]) -> Option<R>,
) -> Option<R> {
    if k == 0 {
        return f(&[]);
    }
    if values.is_empty() {
        return None;
    }
    let mut idx = vec![0usize; k];
    let mut tuple: Vec<Scalar> = vec![values[0].clone(); k];
    loop {
        if let Some(r) = f(&tuple) {
            return Some(r);
        }
        let mut pos = k;
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < values.len() {
                tuple[pos] = values[idx[pos]].clone();
                break;
            }
            idx[pos] = 0;
            tuple[pos] = values[0].clone();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, q};

    #[test]
    fn default_grid_order() {
        let r = SearchRegion::default();
        let expected = [
            int(0),
            int(1),
            int(-1),
            int(2),
            int(-2),
            int(3),
            int(-3),
            q(1, 2),
            q(-1, 2),
            q(3, 2),
            q(-3, 2),
        ];
        assert_eq!(r.values(), &expected);
    }

    #[test]
    fn tuples_are_lexicographic() {
        let vals = [int(0), int(1)];
        let mut seen = Vec::new();
        let none: Option<()> = for_each_tuple(&vals, 2, |t| {
            seen.push(t.to_vec());
            None
        });
        assert!(none.is_none());
        assert_eq!(
            seen,
            vec![
                vec![int(0), int(0)],
                vec![int(0), int(1)],
                vec![int(1), int(0)],
                vec![int(1), int(1)]
            ]
        );
    }
}
