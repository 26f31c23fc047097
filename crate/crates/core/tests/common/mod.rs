#![allow(dead_code)]

use combinv::matrix::IndexedMatrix;
use combinv::rational::{parse_text, Rational};
use combinv::shapes::{parse_parts, Composition, Partition, ShapeKey};

pub fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

pub fn comp(p: &[usize]) -> Composition {
    Composition::new(p.to_vec()).unwrap()
}

/// A printed table: the first line holds column keys, every other line a
/// row key followed by its entries.
pub struct Table {
    pub rows: Vec<Vec<usize>>,
    pub cols: Vec<Vec<usize>>,
    pub entries: Vec<Vec<Rational>>,
}

impl Table {
    pub fn parse(text: &str) -> Table {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let cols = lines.next().unwrap().split_whitespace().map(|k| parse_parts(k).unwrap()).collect();
        let mut rows = Vec::new();
        let mut entries = Vec::new();
        for line in lines {
            let mut cells = line.split_whitespace();
            rows.push(parse_parts(cells.next().unwrap()).unwrap());
            entries.push(cells.map(|c| parse_text(c).unwrap()).collect());
        }
        Table { rows, cols, entries }
    }

    /// Entry-for-entry equality, keys and order included.
    pub fn matches<R: ShapeKey, C: ShapeKey>(&self, m: &IndexedMatrix<R, C>) -> bool {
        let rows: Vec<Vec<usize>> = m.rows().iter().map(|r| r.parts().to_vec()).collect();
        let cols: Vec<Vec<usize>> = m.cols().iter().map(|c| c.parts().to_vec()).collect();
        rows == self.rows
            && cols == self.cols
            && (0..rows.len()).all(|i| (0..cols.len()).all(|j| m.at(i, j) == &self.entries[i][j]))
    }
}

pub const KOSTKA_A4: &str = "
         4 31 22 211 13 121 112 1111
    4    1  1  1  1   1  1   1   1
    31   0  1  1  2   1  2   2   3
    22   0  0  1  1   0  1   1   2
    211  0  0  0  1   0  1   1   3
    1111 0  0  0  0   0  0   0   1
";

pub const KOSTKA_B4: &str = "
         4  31 22 211 1111
    4    1  -1  0  1  -1
    31   0   1  0 -1   1
    22   0   0  1 -1   1
    211  0   0  0  1  -1
    13   0   0 -1  0   1
    121  0   0  0  0  -1
    112  0   0  0  0  -1
    1111 0   0  0  0   1
";

pub const RIMHOOK_A4: &str = "
         4  31 22 211 13 121 112 1111
    4    1   1  1  1   1  1   1   1
    31   -1  0 -1  1   0  1   1   3
    22   0  -1  2  0  -1  0   0   2
    211  1   0 -1 -1   0 -1  -1   3
    1111 -1  1  1 -1   1 -1  -1   1
";

pub const RIMHOOK_B4: &str = "
         4     31    22    211   1111
    4    1/4   -1/4  0     1/4   -1/4
    31   1/12  0     -1/12 0     1/12
    22   1/8   -1/8  2/8   -1/8  1/8
    211  1/24  1/24  0     -1/24 -1/24
    13   1/4   0     -1/4  0     1/4
    121  1/12  1/12  0     -1/12 -1/12
    112  1/8   1/8   0     -1/8  -1/8
    1111 1/24  3/24  2/24  3/24  1/24
";

pub const REFINE_A4: &str = "
         4 31 22 211 13 121 112 1111
    4    1 0  0  0   0  0   0   0
    31   1 1  0  0   0  0   0   0
    22   1 0  1  0   0  0   0   0
    211  1 1  1  1   0  0   0   0
    13   1 0  0  0   1  0   0   0
    121  1 1  0  0   1  1   0   0
    112  1 0  1  0   1  0   1   0
    1111 1 1  1  1   1  1   1   1
";

pub const REFINE_B4: &str = "
         4  31 22 211 13 121 112 1111
    4    1  0  0  0   0  0   0   0
    31   -1 1  0  0   0  0   0   0
    22   -1 0  1  0   0  0   0   0
    211  1  -1 -1 1   0  0   0   0
    13   -1 0  0  0   1  0   0   0
    121  1  -1 0  0  -1  1   0   0
    112  1  0  -1 0  -1  0   1   0
    1111 -1 1  1  -1  1 -1  -1   1
";

pub const BRICK_A4: &str = "
         4 31 22 211 13 121 112 1111
    4    1 1  1  1   1  1   1   1
    31   0 1  0  2   1  2   2   4
    22   0 0  2  2   0  2   2   6
    211  0 0  0  2   0  2   2   12
    1111 0 0  0  0   0  0   0   24
";

pub const BRICK_B4: &str = "
         4  31   22   211   1111
    4    1  -1   -1/2 1     -1/4
    31   0  1/4  0    -1/4  1/12
    22   0  0    1/2  -1/2  1/8
    211  0  0    0    1/12  -1/24
    13   0  3/4  0    -3/4  1/4
    121  0  0    0    1/6   -1/12
    112  0  0    0    1/4   -1/8
    1111 0  0    0    0     1/24
";

pub const BRICK_A4_SQUARE: &str = "
         4 31 22 211 1111
    4    1 1  1  1   1
    31   0 1  0  2   4
    22   0 0  2  2   6
    211  0 0  0  2   12
    1111 0 0  0  0   24
";

pub const BRICK_B4_SQUARE: &str = "
         4  31  22   211   1111
    4    1  -1  -1/2 1     -1/4
    31   0  1   0    -1    1/3
    22   0  0   1/2  -1/2  1/8
    211  0  0   0    1/2   -1/4
    1111 0  0   0    0     1/24
";
