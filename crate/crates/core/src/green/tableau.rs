use std::fmt;

use crate::combinatorics::Partition;
use crate::error::{Error, Result};

/// A semistandard Young tableau in English notation: rows weakly increase
/// left to right, columns strictly increase top to bottom.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::MalformedTableau(e.to_string()))?;
        if shape.parts() != rows.iter().map(Vec::len).collect::<Vec<_>>().as_slice() {
            return Err(Error::MalformedTableau(format!("row lengths {shape} are not non-increasing")));
        }
        if rows.iter().flatten().any(|&v| v == 0) {
            return Err(Error::MalformedTableau("entries must be positive".into()));
        }
        for row in &rows {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::MalformedTableau(format!("row {row:?} decreases")));
            }
        }
        for pair in rows.windows(2) {
            if pair[1].iter().zip(&pair[0]).any(|(below, above)| below <= above) {
                return Err(Error::MalformedTableau(format!(
                    "column not strictly increasing between {:?} and {:?}",
                    pair[0], pair[1]
                )));
            }
        }
        Ok(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// `content[v-1]` is the number of entries equal to `v`.
    pub fn content(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut content = vec![0; max];
        for &v in self.rows.iter().flatten() {
            content[v - 1] += 1;
        }
        content
    }

    /// Rows read right to left, top row first.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flat_map(|r| r.iter().rev().copied()).collect()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

/// All semistandard tableaux of the given shape and content, built by
/// adding the entries equal to 1, 2, ... as successive horizontal strips.
pub fn ssyt_enumerate(shape: &Partition, content: &Partition) -> Result<Vec<Tableau>> {
    shape.check_same_weight(content)?;
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
    add_strips(shape.parts(), content.parts(), 0, &mut rows, &mut out);
    Ok(out)
}

fn add_strips(shape: &[usize], content: &[usize], value: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
    if value == content.len() {
        out.push(Tableau {
            shape: Partition::normalized(shape.to_vec()),
            rows: rows.clone(),
        });
        return;
    }
    let before: Vec<usize> = rows.iter().map(Vec::len).collect();
    place_strip(shape, content, value, 0, content[value], &before, rows, out);
}

/// Distributes `left` copies of `value + 1` over rows `row..`, keeping the
/// addition a horizontal strip: row `i` may grow up to the old length of
/// row `i − 1`.
#[allow(clippy::too_many_arguments)]
fn place_strip(
    shape: &[usize],
    content: &[usize],
    value: usize,
    row: usize,
    left: usize,
    before: &[usize],
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<Tableau>,
) {
    if left == 0 {
        add_strips(shape, content, value + 1, rows, out);
        return;
    }
    if row == shape.len() {
        return;
    }
    let cap = if row == 0 { shape[0] } else { shape[row].min(before[row - 1]) };
    let room = cap.saturating_sub(before[row]);
    for k in (0..=room.min(left)).rev() {
        rows[row].extend(std::iter::repeat_n(value + 1, k));
        place_strip(shape, content, value, row + 1, left - k, before, rows, out);
        let len = rows[row].len();
        rows[row].truncate(len - k);
    }
}

/// The Lascoux–Schützenberger charge of a word whose content is a partition.
///
/// The word is split into standard subwords: scanning from the right, take
/// the first 1, then the first 2 to its left, and so on, wrapping around to
/// the right end whenever the next letter is not found further left. In a
/// standard subword the letter 1 has index 0, and `r+1` has the index of `r`
/// if it lies to the right of `r`, one more if it lies to the left. The
/// charge is the total of all indices over all subwords.
///
/// Example: the tableau `[1 2 / 3]` reads as `2 1 3`; 1 has index 0, 2 sits
/// left of 1 (index 1), 3 sits right of 2 (index 1), so the charge is 2.
pub fn word_charge(word: &[usize]) -> Result<usize> {
    let max = word.iter().copied().max().unwrap_or(0);
    let mut content = vec![0usize; max];
    for &v in word {
        if v == 0 {
            return Err(Error::MalformedTableau("letters must be positive".into()));
        }
        content[v - 1] += 1;
    }
    if content.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::MalformedTableau(format!(
            "charge needs partition content, got {content:?}"
        )));
    }
    let mut remaining: Vec<Option<usize>> = word.iter().map(|&v| Some(v)).collect();
    let mut total = 0;
    while remaining.iter().any(Option::is_some) {
        let top = remaining.iter().flatten().copied().max().unwrap();
        let len = remaining.len();
        let mut pos = len; // scan starts just past the right end
        let mut index = 0;
        for letter in 1..=top {
            // Search leftwards from `pos`, wrapping once.
            let mut found = None;
            for step in 1..=len {
                let p = (pos + len * 2 - step) % len;
                if remaining[p] == Some(letter) {
                    found = Some((p, step));
                    break;
                }
            }
            let (p, _) = found.expect("partition content guarantees every letter up to the maximum");
            if letter > 1 && p > pos {
                // Wrapped past the left end: r+1 lies to the right of r.
            } else if letter > 1 {
                index += 1;
            }
            total += index;
            remaining[p] = None;
            pos = p;
        }
    }
    Ok(total)
}

pub fn charge(t: &Tableau) -> Result<usize> {
    word_charge(&t.reading_word())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_small_cases() {
        for lambda in crate::combinatorics::all_partitions(5) {
            assert_eq!(ssyt_enumerate(&Partition::row(5), &lambda).unwrap().len(), 1);
        }
        let two = ssyt_enumerate(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap();
        assert_eq!(
            two.iter().map(|t| t.rows().to_vec()).collect::<Vec<_>>(),
            vec![vec![vec![1, 2], vec![3]], vec![vec![1, 3], vec![2]]]
        );
        assert!(ssyt_enumerate(&p(&[1, 1, 1]), &p(&[2, 1])).unwrap().is_empty());
        assert!(ssyt_enumerate(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn enumerated_tableaux_are_valid() {
        for shape in crate::combinatorics::all_partitions(6) {
            for content in crate::combinatorics::all_partitions(6) {
                for t in ssyt_enumerate(&shape, &content).unwrap() {
                    let rebuilt = Tableau::new(t.rows().to_vec()).unwrap();
                    assert_eq!(rebuilt.shape(), &shape);
                    assert_eq!(t.content(), content.parts());
                }
            }
        }
    }

    #[test]
    fn constructor_rejects_bad_tableaux() {
        assert!(Tableau::new(vec![vec![2, 1]]).is_err());
        assert!(Tableau::new(vec![vec![1, 2], vec![1]]).is_err());
        assert!(Tableau::new(vec![vec![1], vec![2, 3]]).is_err());
        assert!(Tableau::new(vec![vec![0]]).is_err());
    }

    #[test]
    fn charge_examples() {
        let t1 = Tableau::new(vec![vec![1, 2], vec![3]]).unwrap();
        let t2 = Tableau::new(vec![vec![1, 3], vec![2]]).unwrap();
        assert_eq!(t1.reading_word(), vec![2, 1, 3]);
        assert_eq!(charge(&t1).unwrap(), 2);
        assert_eq!(charge(&t2).unwrap(), 1);
        for lambda in crate::combinatorics::all_partitions(6) {
            let row = &ssyt_enumerate(&Partition::row(6), &lambda).unwrap()[0];
            assert_eq!(charge(row).unwrap(), lambda.n_statistic());
        }
        let single = Tableau::new(vec![vec![1, 1, 1]]).unwrap();
        assert_eq!(charge(&single).unwrap(), 0);
        // content (1,2) is not a partition
        assert!(word_charge(&[2, 2, 1]).is_err());
    }
}
