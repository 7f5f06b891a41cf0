//! Published threshold tables, as printed (two or three significant figures
//! unless the entry is a small integer).

use bound_engine::Family;

/// One published table: its bound family, column `k` values and rows.
pub struct PublishedTable {
    pub number: u8,
    pub family: Family,
    pub ks: [u64; 5],
    pub rows: &'static [((u64, u64), [&'static str; 5])],
}

pub const TABLE_1: PublishedTable = PublishedTable {
    number: 1,
    family: Family::C,
    ks: [1, 100, 10_000, 1_000_000, 100_000_000],
    rows: &[
        ((4, 1), ["8382", "5682", "98839", "5.6e5", "0"]),
        ((10, 3), ["1.67e6", "2e5", "2.65e6", "5.37e7", "8.43e8"]),
        ((20, 3), ["5.33e7", "3.5e6", "2.14e7", "4.48e8", "8.54e9"]),
        ((50, 21), ["1.90e10", "9.13e8", "7.7e8", "1.38e10", "3.33e11"]),
        ((100, 19), ["2.26e11", "2.67e10", "6.18e9", "5.70e11", "2.29e12"]),
        ((1000, 333), ["5.97e15", "1.78e16", "8.41e14", "1.07e11", "3.16e14"]),
    ],
};

pub const TABLE_2: PublishedTable = PublishedTable {
    number: 2,
    family: Family::D,
    ks: [1, 10, 100, 10_000, 1_000_000],
    rows: &[
        ((5, 2), ["175910", "12", "0", "0", "0"]),
        ((9, 2), ["2.22e7", "7769", "0", "0", "0"]),
        ((11, 4), ["4.90e7", "60430", "0", "0", "0"]),
        ((21, 4), ["8.89e9", "3.67e6", "0", "0", "0"]),
        ((53, 20), ["2.68e12", "4.34e9", "3.22e7", "0", "0"]),
    ],
};

pub const TABLE_3: PublishedTable = PublishedTable {
    number: 3,
    family: Family::E,
    ks: [1, 10, 100, 10_000, 1_000_000],
    rows: &[
        ((2, 1), ["216", "0", "0", "0", "0"]),
        ((3, 1), ["11835", "0", "0", "0", "0"]),
        ((10, 3), ["5.79e7", "48525", "0", "0", "0"]),
        ((20, 3), ["1.87e10", "4.86e6", "0", "0", "0"]),
        ((50, 21), ["1.77e12", "3.51e9", "2.60e7", "0", "0"]),
    ],
};

impl PublishedTable {
    /// Every `(r, s, k, printed value)` cell.
    pub fn cells(&self) -> impl Iterator<Item = (u64, u64, u64, &'static str)> + '_ {
        self.rows.iter().flat_map(move |&((r, s), vals)| self.ks.iter().zip(vals).map(move |(&k, v)| (r, s, k, v)))
    }

    /// The printed value of a cell, if the table has it.
    pub fn lookup(&self, r: u64, s: u64, k: u64) -> Option<&'static str> {
        self.cells().find(|&(cr, cs, ck, _)| (cr, cs, ck) == (r, s, k)).map(|c| c.3)
    }
}
