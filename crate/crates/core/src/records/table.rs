/// One cell of the bounds table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub length: usize,
    pub optimal: bool,
    pub source: &'static str,
    /// Record this cell superseded, as `(length, source)`.
    pub previous: Option<(usize, &'static str)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRow {
    pub dimension: u8,
    pub snake: Cell,
    pub coil: Cell,
}

const fn cell(length: usize, optimal: bool, source: &'static str) -> Cell {
    Cell {
        length,
        optimal,
        source,
        previous: None,
    }
}

const fn new_record(length: usize, previous: usize, previous_source: &'static str) -> Cell {
    Cell {
        length,
        optimal: false,
        source: super::BUNDLED_SOURCE,
        previous: Some((previous, previous_source)),
    }
}

const fn row(dimension: u8, snake: Cell, coil: Cell) -> TableRow {
    TableRow {
        dimension,
        snake,
        coil,
    }
}

/// Lower bounds on the longest snake and coil for `n = 1..=20`. Starred
/// (optimal) entries are exact. Snake bounds for `n >= 14` come from the coil
/// bound by deleting one vertex.
pub static TABLE: [TableRow; 20] = [
    row(1, cell(1, true, "none"), cell(0, true, "none")),
    row(2, cell(2, true, "Da65"), cell(4, true, "Ka58")),
    row(3, cell(4, true, "Da65"), cell(6, true, "Ka58")),
    row(4, cell(7, true, "Da65"), cell(8, true, "Ka58")),
    row(5, cell(13, true, "Da65"), cell(14, true, "Ka58")),
    row(6, cell(26, true, "Da65"), cell(26, true, "Da65")),
    row(7, cell(50, true, "PRMK94"), cell(48, true, "Ko96")),
    row(8, cell(98, true, "OP15"), cell(96, true, "OP14")),
    row(9, cell(190, false, "Wy12"), cell(188, false, "Wy12")),
    row(10, cell(370, false, "Ki12"), new_record(366, 362, "MDWP15")),
    row(
        11,
        new_record(712, 707, "MDWP15"),
        new_record(692, 668, "MDWP15"),
    ),
    row(
        12,
        new_record(1373, 1302, "MDWP15"),
        new_record(1344, 1276, "MDWP15"),
    ),
    row(
        13,
        new_record(2687, 2520, "MDWP15"),
        new_record(2594, 2468, "AK91"),
    ),
    row(14, cell(4932, false, "AK91"), cell(4934, false, "AK91")),
    row(15, cell(9866, false, "AK91"), cell(9868, false, "AK91")),
    row(16, cell(19738, false, "AK91"), cell(19740, false, "AK91")),
    row(17, cell(39478, false, "AK91"), cell(39480, false, "AK91")),
    row(18, cell(78958, false, "AK91"), cell(78960, false, "AK91")),
    row(19, cell(157898, false, "AK91"), cell(157900, false, "AK91")),
    row(20, cell(315798, false, "AK91"), cell(315800, false, "AK91")),
];
