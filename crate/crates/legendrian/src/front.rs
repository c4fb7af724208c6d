//! Plat-position front diagrams and their classical invariants.
//!
//! A front in plat position has all `c` left cusps on the left edge, all `c`
//! right cusps on the right edge, and `n` crossings at distinct x positions
//! in between. Strand positions are numbered 1..2c from the bottom, and cusp
//! `k` joins positions (2k-1, 2k) on its edge. The whole diagram is the cusp
//! count plus the left-to-right word of crossing positions.

use std::fmt;

use thiserror::Error;

use crate::grading::reduce;

/// A plat diagram: `cusps` = c, `crossings[i]` = position of the (i+1)-th
/// crossing, 1 <= position <= 2c-1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlatDiagram {
    cusps: usize,
    crossings: Vec<usize>,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("cusp count must be at least 1")]
    NoCusps,
    #[error("crossing {index} at position {position} is out of range [1, {max}]")]
    PositionOutOfRange {
        index: usize,
        position: usize,
        max: usize,
    },
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ValidateError {
    #[error("diagram closes up into {components} components; a knot must have exactly one")]
    MultiComponent { components: usize },
}

impl PlatDiagram {
    pub fn new(cusps: usize, crossings: Vec<usize>) -> Result<Self, DiagramError> {
        if cusps == 0 {
            return Err(DiagramError::NoCusps);
        }
        let max = 2 * cusps - 1;
        for (i, &s) in crossings.iter().enumerate() {
            if s < 1 || s > max {
                return Err(DiagramError::PositionOutOfRange {
                    index: i + 1,
                    position: s,
                    max,
                });
            }
        }
        Ok(PlatDiagram { cusps, crossings })
    }

    pub fn cusps(&self) -> usize {
        self.cusps
    }

    pub fn crossings(&self) -> &[usize] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn strand_count(&self) -> usize {
        2 * self.cusps
    }

    /// Position of the 1-based crossing `i`.
    pub fn position(&self, i: usize) -> usize {
        self.crossings[i - 1]
    }

    /// Mirror across the horizontal axis: position p maps to 2c+1-p, so a
    /// crossing at s lands at 2c-s. Cusp pairs map to cusp pairs.
    pub fn vertical_flip(&self) -> PlatDiagram {
        let w = 2 * self.cusps;
        PlatDiagram {
            cusps: self.cusps,
            crossings: self.crossings.iter().map(|&s| w - s).collect(),
        }
    }

    /// Parse the plat file format:
    ///
    /// ```text
    /// plat v1
    /// cusps 2
    /// crossings 2 2 2
    /// ```
    ///
    /// `#` starts a comment; blank lines are skipped; tokens are separated
    /// by whitespace. Errors carry the 1-based physical line number.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
            let stripped = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = stripped.split_whitespace().collect();
            if tokens.is_empty() {
                None
            } else {
                Some((i + 1, tokens))
            }
        });
        let total = text.lines().count();

        let (line, header) = lines
            .next()
            .ok_or_else(|| ParseError::new(total + 1, "missing header line `plat v1`"))?;
        if header != ["plat", "v1"] {
            return Err(ParseError::new(
                line,
                format!(
                    "malformed header: expected `plat v1`, got `{}`",
                    header.join(" ")
                ),
            ));
        }

        let (line, cusp_tokens) = lines
            .next()
            .ok_or_else(|| ParseError::new(total + 1, "missing `cusps <c>` line"))?;
        if cusp_tokens.len() != 2 || cusp_tokens[0] != "cusps" {
            return Err(ParseError::new(line, "expected `cusps <c>`"));
        }
        let cusps: usize = cusp_tokens[1].parse().map_err(|_| {
            ParseError::new(
                line,
                format!("`{}` is not a valid cusp count", cusp_tokens[1]),
            )
        })?;
        if cusps == 0 {
            return Err(ParseError::new(line, "cusp count must be at least 1"));
        }

        let (line, cross_tokens) = lines
            .next()
            .ok_or_else(|| ParseError::new(total + 1, "missing `crossings ...` line"))?;
        if cross_tokens[0] != "crossings" {
            return Err(ParseError::new(line, "expected `crossings <positions...>`"));
        }
        let max = 2 * cusps - 1;
        let mut crossings = Vec::with_capacity(cross_tokens.len() - 1);
        for tok in &cross_tokens[1..] {
            let s: usize = tok.parse().map_err(|_| {
                ParseError::new(line, format!("`{tok}` is not a valid crossing position"))
            })?;
            if s < 1 || s > max {
                return Err(ParseError::new(
                    line,
                    format!("crossing position {s} out of range [1, {max}]"),
                ));
            }
            crossings.push(s);
        }

        if let Some((line, extra)) = lines.next() {
            return Err(ParseError::new(
                line,
                format!("unexpected trailing content `{}`", extra.join(" ")),
            ));
        }

        Ok(PlatDiagram { cusps, crossings })
    }

    /// Canonical serialization; `parse(serialize(d)) == d`.
    pub fn serialize(&self) -> String {
        self.to_string()
    }

    /// Build the occupancy table, trace the closure, and orient the knot.
    /// Fails iff the plat closure has more than one component.
    pub fn validate(&self) -> Result<OrientedDiagram, ValidateError> {
        OrientedDiagram::build(self.clone())
    }
}

impl fmt::Display for PlatDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "plat v1\ncusps {}\ncrossings", self.cusps)?;
        for s in &self.crossings {
            write!(f, " {s}")?;
        }
        writeln!(f)
    }
}

/// Which strand occupies each position at each inter-crossing slice.
/// Slice j sits between crossing j and crossing j+1 (slice 0 = left edge,
/// slice n = right edge); adjacent slices differ by the transposition at
/// the crossing between them. Strands are named by their slice-0 position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OccupancyTable {
    width: usize,
    slices: Vec<Vec<usize>>,
}

impl OccupancyTable {
    fn build(d: &PlatDiagram) -> OccupancyTable {
        let width = d.strand_count();
        let mut slices = Vec::with_capacity(d.crossing_count() + 1);
        let mut cur: Vec<usize> = (1..=width).collect();
        slices.push(cur.clone());
        for &s in d.crossings() {
            cur.swap(s - 1, s);
            slices.push(cur.clone());
        }
        OccupancyTable { width, slices }
    }

    pub fn slice_count(&self) -> usize {
        self.slices.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Strand at 1-based `position` in slice `slice`.
    pub fn strand_at(&self, slice: usize, position: usize) -> usize {
        self.slices[slice][position - 1]
    }

    /// Right-edge position of `strand`.
    pub fn right_position(&self, strand: usize) -> usize {
        let last = self.slices.last().expect("at least the left-edge slice");
        last.iter()
            .position(|&x| x == strand)
            .expect("strand exists")
            + 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Rightward,
    Leftward,
}

impl Direction {
    fn reversed(self) -> Direction {
        match self {
            Direction::Rightward => Direction::Leftward,
            Direction::Leftward => Direction::Rightward,
        }
    }
}

/// Traversal type of a cusp: entering on the lower strand and leaving on
/// the upper is `Up`, the reverse is `Down`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CuspType {
    Up,
    Down,
}

impl CuspType {
    fn reversed(self) -> CuspType {
        match self {
            CuspType::Up => CuspType::Down,
            CuspType::Down => CuspType::Up,
        }
    }
}

/// A validated single-component plat with its canonical orientation: the
/// strand at position 1 on the left edge points rightward.
#[derive(Debug, Clone)]
pub struct OrientedDiagram {
    diagram: PlatDiagram,
    occupancy: OccupancyTable,
    direction: Vec<Direction>,
    left_cusp_types: Vec<CuspType>,
    right_cusp_types: Vec<CuspType>,
}

fn cusp_partner(position: usize) -> usize {
    if position % 2 == 1 {
        position + 1
    } else {
        position - 1
    }
}

impl OrientedDiagram {
    fn build(diagram: PlatDiagram) -> Result<OrientedDiagram, ValidateError> {
        let occupancy = OccupancyTable::build(&diagram);
        let c = diagram.cusps();
        let width = diagram.strand_count();

        // Trace the closure from strand 1 rightward; each strand is
        // traversed exactly once, so visiting all of them means one
        // component.
        let mut direction = vec![Direction::Rightward; width];
        let mut left_cusp_types = vec![CuspType::Up; c];
        let mut right_cusp_types = vec![CuspType::Up; c];
        let mut visited = vec![false; width];
        let mut strand = 1usize;
        let mut dir = Direction::Rightward;
        loop {
            visited[strand - 1] = true;
            direction[strand - 1] = dir;
            match dir {
                Direction::Rightward => {
                    let arrive = occupancy.right_position(strand);
                    let depart = cusp_partner(arrive);
                    let k = arrive.div_ceil(2);
                    right_cusp_types[k - 1] = if depart > arrive {
                        CuspType::Up
                    } else {
                        CuspType::Down
                    };
                    strand = occupancy.strand_at(occupancy.slice_count() - 1, depart);
                    dir = Direction::Leftward;
                }
                Direction::Leftward => {
                    let arrive = strand; // left-edge position = strand id
                    let depart = cusp_partner(arrive);
                    let k = arrive.div_ceil(2);
                    left_cusp_types[k - 1] = if depart > arrive {
                        CuspType::Up
                    } else {
                        CuspType::Down
                    };
                    strand = depart;
                    dir = Direction::Rightward;
                }
            }
            if strand == 1 && dir == Direction::Rightward {
                break;
            }
        }

        let unvisited = visited.iter().filter(|&&v| !v).count();
        if unvisited > 0 {
            // Count the remaining closure cycles for the diagnostic.
            let mut components = 1;
            while let Some(start) = visited.iter().position(|&v| !v) {
                components += 1;
                let mut strand = start + 1;
                let mut dir = Direction::Rightward;
                loop {
                    visited[strand - 1] = true;
                    match dir {
                        Direction::Rightward => {
                            let depart = cusp_partner(occupancy.right_position(strand));
                            strand = occupancy.strand_at(occupancy.slice_count() - 1, depart);
                            dir = Direction::Leftward;
                        }
                        Direction::Leftward => {
                            strand = cusp_partner(strand);
                            dir = Direction::Rightward;
                        }
                    }
                    if strand == start + 1 && dir == Direction::Rightward {
                        break;
                    }
                }
            }
            return Err(ValidateError::MultiComponent { components });
        }

        Ok(OrientedDiagram {
            diagram,
            occupancy,
            direction,
            left_cusp_types,
            right_cusp_types,
        })
    }

    pub fn diagram(&self) -> &PlatDiagram {
        &self.diagram
    }

    pub fn occupancy(&self) -> &OccupancyTable {
        &self.occupancy
    }

    pub fn direction(&self, strand: usize) -> Direction {
        self.direction[strand - 1]
    }

    pub fn left_cusp_type(&self, k: usize) -> CuspType {
        self.left_cusp_types[k - 1]
    }

    pub fn right_cusp_type(&self, k: usize) -> CuspType {
        self.right_cusp_types[k - 1]
    }

    /// Same diagram with the knot traversed the other way.
    pub fn reversed(&self) -> OrientedDiagram {
        OrientedDiagram {
            diagram: self.diagram.clone(),
            occupancy: self.occupancy.clone(),
            direction: self.direction.iter().map(|d| d.reversed()).collect(),
            left_cusp_types: self.left_cusp_types.iter().map(|t| t.reversed()).collect(),
            right_cusp_types: self.right_cusp_types.iter().map(|t| t.reversed()).collect(),
        }
    }

    /// r = (D - U) / 2 over all 2c cusps.
    pub fn rotation_number(&self) -> i64 {
        let mut up = 0i64;
        let mut down = 0i64;
        for t in self.left_cusp_types.iter().chain(&self.right_cusp_types) {
            match t {
                CuspType::Up => up += 1,
                CuspType::Down => down += 1,
            }
        }
        (down - up) / 2
    }

    /// The two strands at crossing `i` on its left slice, as (at position s,
    /// at position s+1). The strand at s+1 descends through the crossing.
    pub fn crossing_strands(&self, i: usize) -> (usize, usize) {
        let s = self.diagram.position(i);
        (
            self.occupancy.strand_at(i - 1, s),
            self.occupancy.strand_at(i - 1, s + 1),
        )
    }

    /// +1 when the two strands run the same way, -1 otherwise.
    pub fn crossing_sign(&self, i: usize) -> i64 {
        let (lower, upper) = self.crossing_strands(i);
        if self.direction(lower) == self.direction(upper) {
            1
        } else {
            -1
        }
    }

    /// tb = writhe - (number of right cusps).
    pub fn thurston_bennequin(&self) -> i64 {
        let writhe: i64 = (1..=self.diagram.crossing_count())
            .map(|i| self.crossing_sign(i))
            .sum();
        writhe - self.diagram.cusps() as i64
    }

    /// Maslov potential mod 2|r|, base value 0 on the strand at position 1
    /// of the left edge, with value(upper) = value(lower) + 1 at each cusp.
    pub fn maslov_potential(&self) -> MaslovPotential {
        let r = self.rotation_number();
        let modulus = (2 * r.unsigned_abs()) as u32;
        let width = self.diagram.strand_count();
        let mut values = vec![0i64; width];
        let mut strand = 1usize;
        let mut dir = Direction::Rightward;
        let mut val = 0i64;
        loop {
            values[strand - 1] = reduce(val, modulus);
            let (arrive, next_strand) = match dir {
                Direction::Rightward => {
                    let arrive = self.occupancy.right_position(strand);
                    let depart = cusp_partner(arrive);
                    (
                        arrive,
                        self.occupancy
                            .strand_at(self.occupancy.slice_count() - 1, depart),
                    )
                }
                Direction::Leftward => (strand, cusp_partner(strand)),
            };
            let depart = cusp_partner(arrive);
            val += if depart > arrive { 1 } else { -1 };
            strand = next_strand;
            dir = dir.reversed();
            if strand == 1 && dir == Direction::Rightward {
                break;
            }
        }
        // Going once around the knot changes the potential by U - D = -2r,
        // which vanishes mod 2|r|; anything else is a construction bug.
        assert_eq!(
            reduce(val, modulus),
            0,
            "Maslov potential fails to close up"
        );
        MaslovPotential { modulus, values }
    }
}

/// Maslov potential of every strand, reduced mod `modulus` (raw integers
/// when the modulus is 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaslovPotential {
    modulus: u32,
    values: Vec<i64>,
}

impl MaslovPotential {
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn strand_value(&self, strand: usize) -> i64 {
        self.values[strand - 1]
    }

    /// Grading of crossing `i`: potential of the descending strand minus the
    /// ascending one, i.e. mu(at s+1) - mu(at s) on the crossing's left slice.
    pub fn crossing_grading(&self, od: &OrientedDiagram, i: usize) -> i64 {
        let (lower, upper) = od.crossing_strands(i);
        reduce(
            self.strand_value(upper) - self.strand_value(lower),
            self.modulus,
        )
    }

    pub fn crossing_gradings(&self, od: &OrientedDiagram) -> Vec<i64> {
        (1..=od.diagram().crossing_count())
            .map(|i| self.crossing_grading(od, i))
            .collect()
    }

    /// Potential difference of the strands at two positions of a slice,
    /// mu(at low) - mu(at high), reduced. Used for dip-pair gradings.
    pub fn pair_grading(&self, od: &OrientedDiagram, slice: usize, low: usize, high: usize) -> i64 {
        let occ = od.occupancy();
        reduce(
            self.strand_value(occ.strand_at(slice, low))
                - self.strand_value(occ.strand_at(slice, high)),
            self.modulus,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn trefoil() -> OrientedDiagram {
        PlatDiagram::new(2, vec![2, 2, 2])
            .unwrap()
            .validate()
            .unwrap()
    }

    fn unknot() -> OrientedDiagram {
        PlatDiagram::new(1, vec![]).unwrap().validate().unwrap()
    }

    fn stabilized_unknot() -> OrientedDiagram {
        PlatDiagram::new(2, vec![1, 2]).unwrap().validate().unwrap()
    }

    #[test]
    fn parse_trefoil() {
        let d = PlatDiagram::parse("plat v1\ncusps 2\ncrossings 2 2 2\n").unwrap();
        assert_eq!(d, PlatDiagram::new(2, vec![2, 2, 2]).unwrap());
    }

    #[test]
    fn parse_unknot_empty_word() {
        let d = PlatDiagram::parse("plat v1\ncusps 1\ncrossings").unwrap();
        assert_eq!(d, PlatDiagram::new(1, vec![]).unwrap());
    }

    #[test]
    fn parse_comments_and_whitespace() {
        let text = "# a trefoil\nplat v1\n  cusps 2   # two cusps\n\ncrossings 2  2 2\n";
        let d = PlatDiagram::parse(text).unwrap();
        assert_eq!(d.crossings(), &[2, 2, 2]);
    }

    #[test]
    fn parse_rejects_out_of_range_position() {
        let err = PlatDiagram::parse("plat v1\ncusps 2\ncrossings 4 1").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.message.contains("out of range"), "{}", err.message);
    }

    #[test]
    fn parse_rejects_bad_header_and_counts() {
        assert_eq!(
            PlatDiagram::parse("plat v2\ncusps 1\ncrossings")
                .unwrap_err()
                .line,
            1
        );
        assert_eq!(
            PlatDiagram::parse("plat v1\ncusps 0\ncrossings")
                .unwrap_err()
                .line,
            2
        );
        assert_eq!(
            PlatDiagram::parse("plat v1\ncusps 2\ncrossings x")
                .unwrap_err()
                .line,
            3
        );
        assert_eq!(
            PlatDiagram::parse("plat v1\ncusps 2\ncrossings 1\nextra")
                .unwrap_err()
                .line,
            4
        );
        assert!(PlatDiagram::parse("plat v1\ncusps 2\n").is_err());
    }

    #[test]
    fn serialize_round_trip() {
        let d = PlatDiagram::new(2, vec![2, 2, 2]).unwrap();
        assert_eq!(d.serialize(), "plat v1\ncusps 2\ncrossings 2 2 2\n");
        assert_eq!(PlatDiagram::parse(&d.serialize()).unwrap(), d);
        let u = PlatDiagram::new(1, vec![]).unwrap();
        assert_eq!(u.serialize(), "plat v1\ncusps 1\ncrossings\n");
        assert_eq!(PlatDiagram::parse(&u.serialize()).unwrap(), u);
    }

    #[test]
    fn occupancy_adjacent_slices_differ_by_transposition() {
        let od = trefoil();
        let occ = od.occupancy();
        assert_eq!(occ.slice_count(), 4);
        // slice 0 is the identity
        for p in 1..=4 {
            assert_eq!(occ.strand_at(0, p), p);
        }
        // each later slice swaps exactly positions 2 and 3
        for j in 1..4 {
            for p in 1..=4 {
                let prev = occ.strand_at(j - 1, p);
                let expect = match p {
                    2 => occ.strand_at(j - 1, 3),
                    3 => occ.strand_at(j - 1, 2),
                    _ => prev,
                };
                assert_eq!(occ.strand_at(j, p), expect);
            }
        }
    }

    #[test]
    fn validate_trefoil_is_a_knot() {
        let od = trefoil();
        assert_eq!(od.direction(1), Direction::Rightward);
        assert_eq!(od.direction(2), Direction::Leftward);
        assert_eq!(od.direction(3), Direction::Leftward);
        assert_eq!(od.direction(4), Direction::Rightward);
    }

    #[test]
    fn validate_rejects_two_component_links() {
        let err = PlatDiagram::new(2, vec![]).unwrap().validate().unwrap_err();
        assert_eq!(err, ValidateError::MultiComponent { components: 2 });
        let err = PlatDiagram::new(2, vec![2, 2])
            .unwrap()
            .validate()
            .unwrap_err();
        assert_eq!(err, ValidateError::MultiComponent { components: 2 });
    }

    #[test]
    fn rotation_numbers() {
        assert_eq!(trefoil().rotation_number(), 0);
        assert_eq!(unknot().rotation_number(), 0);
        let od = stabilized_unknot();
        assert_eq!(od.rotation_number(), 1);
        assert_eq!(od.reversed().rotation_number(), -1);
    }

    #[test]
    fn cusp_type_counts_add_up() {
        for od in [trefoil(), unknot(), stabilized_unknot()] {
            let c = od.diagram().cusps();
            let up = (1..=c)
                .map(|k| od.left_cusp_type(k))
                .chain((1..=c).map(|k| od.right_cusp_type(k)))
                .filter(|&t| t == CuspType::Up)
                .count();
            let down = 2 * c - up;
            assert_eq!(up as i64 - down as i64, -2 * od.rotation_number());
        }
    }

    #[test]
    fn thurston_bennequin_numbers() {
        assert_eq!(trefoil().thurston_bennequin(), 1);
        assert_eq!(unknot().thurston_bennequin(), -1);
        let od = stabilized_unknot();
        assert_eq!(od.thurston_bennequin(), -2);
        // the two crossings contribute -1 and +1
        assert_eq!(od.crossing_sign(1), -1);
        assert_eq!(od.crossing_sign(2), 1);
        assert_eq!(od.reversed().thurston_bennequin(), -2);
    }

    #[test]
    fn maslov_potential_trefoil() {
        let od = trefoil();
        let mp = od.maslov_potential();
        assert_eq!(mp.modulus(), 0);
        assert_eq!(
            (1..=4).map(|s| mp.strand_value(s)).collect::<Vec<_>>(),
            vec![0, 1, 1, 2]
        );
        assert_eq!(mp.crossing_gradings(&od), vec![0, 0, 0]);
    }

    #[test]
    fn maslov_potential_unknot() {
        let od = unknot();
        let mp = od.maslov_potential();
        assert_eq!(mp.modulus(), 0);
        assert_eq!(mp.strand_value(1), 0);
        assert_eq!(mp.strand_value(2), 1);
    }

    #[test]
    fn maslov_potential_stabilized_unknot() {
        let od = stabilized_unknot();
        let mp = od.maslov_potential();
        assert_eq!(mp.modulus(), 2);
        assert_eq!(
            (1..=4).map(|s| mp.strand_value(s)).collect::<Vec<_>>(),
            vec![0, 1, 0, 1]
        );
        assert_eq!(mp.crossing_gradings(&od), vec![1, 0]);
    }

    #[test]
    fn cusp_relation_holds_at_every_cusp() {
        for od in [trefoil(), unknot(), stabilized_unknot()] {
            let mp = od.maslov_potential();
            let occ = od.occupancy();
            let c = od.diagram().cusps();
            let last = occ.slice_count() - 1;
            for k in 1..=c {
                let (lo, hi) = (2 * k - 1, 2 * k);
                assert_eq!(
                    reduce(
                        mp.strand_value(occ.strand_at(0, hi))
                            - mp.strand_value(occ.strand_at(0, lo)),
                        mp.modulus()
                    ),
                    reduce(1, mp.modulus())
                );
                assert_eq!(
                    reduce(
                        mp.strand_value(occ.strand_at(last, hi))
                            - mp.strand_value(occ.strand_at(last, lo)),
                        mp.modulus()
                    ),
                    reduce(1, mp.modulus())
                );
            }
        }
    }

    #[test]
    fn vertical_flip_of_trefoil_is_itself() {
        let d = PlatDiagram::new(2, vec![2, 2, 2]).unwrap();
        assert_eq!(d.vertical_flip(), d);
        let e = PlatDiagram::new(2, vec![1, 2]).unwrap();
        assert_eq!(e.vertical_flip(), PlatDiagram::new(2, vec![3, 2]).unwrap());
    }
}
