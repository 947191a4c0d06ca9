//! The published witness tables, encoded row by row as data.
//!
//! Each table covers every pair of vertex blocks outside the published
//! equalizer set, one group per block pair, reduced by rotation to u = x_0.
//! A row is a condition on the index i plus a witness-index formula.
//! Conditions are matched first to last, so "other odd/even" rows pick up
//! exactly the indices not caught by the explicitly listed special cases of
//! their group.

use crate::polytope::PolytopeClass;

/// Linear index expression v = n_coeff·n + offset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Idx {
    pub n_coeff: i64,
    pub offset: i64,
}

pub const fn idx(n_coeff: i64, offset: i64) -> Idx {
    Idx { n_coeff, offset }
}

impl Idx {
    pub fn eval(self, n: usize) -> i64 {
        self.n_coeff * n as i64 + self.offset
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowCond {
    /// i equals one of the listed expressions.
    AnyOf(Vec<Idx>),
    /// lo ≤ i ≤ hi, inclusive, no wraparound.
    Range(Idx, Idx),
    /// Odd i not matched by an earlier row of the group.
    OtherOdd,
    /// Even i not matched by an earlier row of the group.
    OtherEven,
}

impl RowCond {
    pub fn matches(&self, n: usize, i: usize) -> bool {
        let ii = i as i64;
        match self {
            RowCond::AnyOf(list) => list.iter().any(|x| x.eval(n) == ii),
            RowCond::Range(lo, hi) => lo.eval(n) <= ii && ii <= hi.eval(n),
            RowCond::OtherOdd => i % 2 == 1,
            RowCond::OtherEven => i.is_multiple_of(2),
        }
    }
}

/// Witness vertex: block letter plus the index formula
/// ((n_coeff·n + i_coeff·i + offset) / 2 if halve) + post, reduced mod n.
///
/// Every shipped row's halved numerator is even whenever its condition
/// holds; floor division is used only as a safety net.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessIndex {
    pub block: char,
    pub n_coeff: i64,
    pub i_coeff: i64,
    pub offset: i64,
    pub halve: bool,
    pub post: i64,
}

impl WitnessIndex {
    pub fn eval(self, n: usize, i: usize) -> usize {
        let num = self.n_coeff * n as i64 + self.i_coeff * i as i64 + self.offset;
        let val = if self.halve { num.div_euclid(2) } else { num } + self.post;
        val.rem_euclid(n as i64) as usize
    }
}

const fn witness(
    block: char,
    n_coeff: i64,
    i_coeff: i64,
    offset: i64,
    halve: bool,
    post: i64,
) -> WitnessIndex {
    WitnessIndex {
        block,
        n_coeff,
        i_coeff,
        offset,
        halve,
        post,
    }
}

/// Fixed witness index, independent of i.
const fn at(block: char, n_coeff: i64, offset: i64) -> WitnessIndex {
    witness(block, n_coeff, 0, offset, false, 0)
}

/// Halved witness index ((n_coeff·n + i + offset)/2) + post.
const fn half(block: char, n_coeff: i64, offset: i64, post: i64) -> WitnessIndex {
    witness(block, n_coeff, 1, offset, true, post)
}

#[derive(Debug, Clone)]
pub struct Row {
    pub cond: RowCond,
    pub witness: WitnessIndex,
    /// The row as printed in the source table.
    pub label: &'static str,
}

#[derive(Debug, Clone)]
pub struct RowGroup {
    pub u_block: char,
    pub v_block: char,
    pub rows: Vec<Row>,
}

impl RowGroup {
    /// v-index range: same-block groups exclude i = 0 (u itself).
    pub fn index_range(&self, n: usize) -> std::ops::Range<usize> {
        if self.u_block == self.v_block {
            1..n
        } else {
            0..n
        }
    }

    pub fn row_for(&self, n: usize, i: usize) -> Option<&Row> {
        self.rows.iter().find(|r| r.cond.matches(n, i))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    Any,
}

impl Parity {
    pub fn admits(self, n: usize) -> bool {
        match self {
            Parity::Even => n.is_multiple_of(2),
            Parity::Odd => n % 2 == 1,
            Parity::Any => true,
        }
    }
}

#[derive(Debug, Clone)]
pub struct TableSpec {
    pub class: PolytopeClass,
    pub parity: Parity,
    pub groups: Vec<RowGroup>,
}

fn row(cond: RowCond, witness: WitnessIndex, label: &'static str) -> Row {
    Row {
        cond,
        witness,
        label,
    }
}

pub fn table_for(class: PolytopeClass) -> TableSpec {
    match class {
        PolytopeClass::R2 => TableSpec {
            class,
            parity: Parity::Even,
            groups: vec![
                RowGroup {
                    u_block: 'd',
                    v_block: 'd',
                    rows: vec![
                        row(
                            RowCond::OtherOdd,
                            half('b', 0, 1, 0),
                            "i odd -> b_((i+1)/2)",
                        ),
                        row(RowCond::OtherEven, half('c', 0, 0, 0), "i even -> c_(i/2)"),
                    ],
                },
                RowGroup {
                    u_block: 'd',
                    v_block: 'e',
                    rows: vec![
                        row(RowCond::AnyOf(vec![idx(0, 0)]), at('a', 0, 2), "i=0 -> a_2"),
                        row(
                            RowCond::AnyOf(vec![idx(1, -1)]),
                            at('c', 0, 3),
                            "i=n-1 -> c_3",
                        ),
                        row(
                            RowCond::OtherOdd,
                            half('a', 1, 1, 0),
                            "other odd i -> a_((n+i+1)/2)",
                        ),
                        row(
                            RowCond::OtherEven,
                            half('a', 0, 0, 1),
                            "other even i -> a_(i/2+1)",
                        ),
                    ],
                },
                RowGroup {
                    u_block: 'd',
                    v_block: 'f',
                    rows: vec![
                        row(
                            RowCond::AnyOf(vec![idx(0, 0), idx(0, 1)]),
                            at('b', 0, 2),
                            "i=0 or i=1 -> b_2",
                        ),
                        row(
                            RowCond::AnyOf(vec![idx(1, -1)]),
                            at('b', 0, 3),
                            "i=n-1 -> b_3",
                        ),
                        row(
                            RowCond::AnyOf(vec![idx(1, -2)]),
                            at('c', 0, 3),
                            "i=n-2 -> c_3",
                        ),
                        row(
                            RowCond::OtherOdd,
                            half('a', 0, 3, 0),
                            "other odd i -> a_((i+3)/2)",
                        ),
                        row(
                            RowCond::OtherEven,
                            half('a', 1, 0, 0),
                            "other even i -> a_((n+i)/2)",
                        ),
                    ],
                },
                RowGroup {
                    u_block: 'e',
                    v_block: 'e',
                    rows: vec![
                        row(
                            RowCond::OtherOdd,
                            half('c', 0, 1, 0),
                            "i odd -> c_((i+1)/2)",
                        ),
                        row(
                            RowCond::OtherEven,
                            half('b', 0, 0, 1),
                            "i even -> b_(i/2+1)",
                        ),
                    ],
                },
                RowGroup {
                    u_block: 'e',
                    v_block: 'f',
                    rows: vec![
                        row(RowCond::AnyOf(vec![idx(0, 0)]), at('c', 0, 2), "i=0 -> c_2"),
                        row(RowCond::AnyOf(vec![idx(0, 1)]), at('a', 0, 3), "i=1 -> a_3"),
                        row(
                            RowCond::AnyOf(vec![idx(1, -4)]),
                            at('b', 1, -1),
                            "i=n-4 -> b_(n-1)",
                        ),
                        row(
                            RowCond::Range(idx(1, -3), idx(1, -1)),
                            at('a', 1, -1),
                            "n-3 <= i <= n-1 -> a_(n-1)",
                        ),
                        row(
                            RowCond::OtherOdd,
                            half('a', 0, 3, 0),
                            "other odd i -> a_((i+3)/2)",
                        ),
                        row(
                            RowCond::OtherEven,
                            half('c', 1, 0, 1),
                            "other even i -> c_((n+i)/2+1)",
                        ),
                    ],
                },
                RowGroup {
                    u_block: 'f',
                    v_block: 'f',
                    rows: vec![
                        row(
                            RowCond::OtherOdd,
                            half('c', 0, 1, 0),
                            "i odd -> c_((i+1)/2)",
                        ),
                        row(
                            RowCond::OtherEven,
                            half('b', 0, 0, 1),
                            "i even -> b_(i/2+1)",
                        ),
                    ],
                },
            ],
        },
        PolytopeClass::S => TableSpec {
            class,
            parity: Parity::Odd,
            groups: vec![
                RowGroup {
                    u_block: 'b',
                    v_block: 'b',
                    rows: vec![
                        row(
                            RowCond::OtherOdd,
                            half('a', 0, 1, 0),
                            "i odd -> a_((i+1)/2)",
                        ),
                        row(RowCond::OtherEven, half('c', 0, 0, 0), "i even -> c_(i/2)"),
                    ],
                },
                RowGroup {
                    u_block: 'b',
                    v_block: 'd',
                    rows: vec![
                        row(
                            RowCond::OtherOdd,
                            half('c', 1, 0, 0),
                            "i odd -> c_((n+i)/2)",
                        ),
                        row(RowCond::OtherEven, half('c', 0, 0, 0), "i even -> c_(i/2)"),
                    ],
                },
                RowGroup {
                    u_block: 'd',
                    v_block: 'd',
                    rows: vec![
                        row(
                            RowCond::OtherOdd,
                            half('c', 1, 0, 0),
                            "i odd -> c_((n+i)/2)",
                        ),
                        row(RowCond::OtherEven, half('c', 0, 0, 0), "i even -> c_(i/2)"),
                    ],
                },
            ],
        },
        PolytopeClass::S2 => TableSpec {
            class,
            parity: Parity::Even,
            groups: vec![
                RowGroup {
                    u_block: 'b',
                    v_block: 'b',
                    rows: vec![
                        row(
                            RowCond::OtherOdd,
                            half('c', 0, -1, 0),
                            "i odd -> c_((i-1)/2)",
                        ),
                        row(RowCond::OtherEven, half('a', 0, 0, 0), "i even -> a_(i/2)"),
                    ],
                },
                RowGroup {
                    u_block: 'b',
                    v_block: 'd',
                    rows: vec![
                        row(
                            RowCond::AnyOf(vec![idx(1, -1)]),
                            at('c', 1, -1),
                            "i=n-1 -> c_(n-1)",
                        ),
                        row(
                            RowCond::OtherOdd,
                            half('a', 1, -1, 0),
                            "other odd i -> a_((n+i-1)/2)",
                        ),
                        row(RowCond::OtherEven, half('c', 0, 0, 0), "i even -> c_(i/2)"),
                    ],
                },
                RowGroup {
                    u_block: 'd',
                    v_block: 'd',
                    rows: vec![
                        row(
                            RowCond::OtherOdd,
                            half('a', 0, 1, 0),
                            "i odd -> a_((i+1)/2)",
                        ),
                        row(RowCond::OtherEven, half('c', 0, 0, 0), "i even -> c_(i/2)"),
                    ],
                },
            ],
        },
        PolytopeClass::T => TableSpec {
            class,
            parity: Parity::Any,
            groups: vec![
                RowGroup {
                    u_block: 'c',
                    v_block: 'c',
                    rows: vec![
                        row(
                            RowCond::OtherOdd,
                            half('a', 0, 1, 0),
                            "i odd -> a_((i+1)/2)",
                        ),
                        row(RowCond::OtherEven, half('b', 0, 0, 0), "i even -> b_(i/2)"),
                    ],
                },
                RowGroup {
                    u_block: 'c',
                    v_block: 'd',
                    rows: vec![
                        row(RowCond::AnyOf(vec![idx(0, 0)]), at('b', 0, 1), "i=0 -> b_1"),
                        row(
                            RowCond::OtherOdd,
                            half('b', 0, 1, 0),
                            "i odd -> b_((i+1)/2)",
                        ),
                        row(
                            RowCond::OtherEven,
                            half('a', 0, 0, 1),
                            "i even, i>=2 -> a_(i/2+1)",
                        ),
                    ],
                },
                RowGroup {
                    u_block: 'd',
                    v_block: 'd',
                    rows: vec![
                        row(
                            RowCond::OtherOdd,
                            half('b', 0, 1, 0),
                            "i odd -> b_((i+1)/2)",
                        ),
                        row(
                            RowCond::OtherEven,
                            half('a', 0, 0, 1),
                            "i even -> a_(i/2+1)",
                        ),
                    ],
                },
            ],
        },
    }
}

/// Blocks of the published equalizer set for each class.
pub fn equalizer_blocks(class: PolytopeClass) -> &'static [char] {
    match class {
        PolytopeClass::R2 => &['a', 'b', 'c'],
        PolytopeClass::S | PolytopeClass::S2 => &['a', 'c'],
        PolytopeClass::T => &['a', 'b'],
    }
}

/// Table groups must cover exactly the unordered block pairs outside the
/// equalizer set, and every index in every group must match some row.
pub fn check_table_coverage(spec: &TableSpec, n: usize) -> Result<(), String> {
    let inside = equalizer_blocks(spec.class);
    let outside: Vec<char> = spec
        .class
        .blocks()
        .iter()
        .copied()
        .filter(|b| !inside.contains(b))
        .collect();
    let mut expected: Vec<(char, char)> = Vec::new();
    for (i, &x) in outside.iter().enumerate() {
        for &y in &outside[i..] {
            expected.push((x, y));
        }
    }
    let mut got: Vec<(char, char)> = spec
        .groups
        .iter()
        .map(|g| {
            if g.u_block <= g.v_block {
                (g.u_block, g.v_block)
            } else {
                (g.v_block, g.u_block)
            }
        })
        .collect();
    got.sort_unstable();
    expected.sort_unstable();
    if got != expected {
        return Err(format!(
            "table covers block pairs {got:?}, outside blocks need {expected:?}"
        ));
    }
    for g in &spec.groups {
        for i in g.index_range(n) {
            if g.row_for(n, i).is_none() {
                return Err(format!(
                    "no row matches ({}0, {}{i}) at n={n}",
                    g.u_block, g.v_block
                ));
            }
        }
    }
    Ok(())
}
