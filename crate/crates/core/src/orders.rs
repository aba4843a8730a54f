//! Weak orders over a finite set of alternatives.
//!
//! A weak order (complete and transitive preference) is stored as an ordered
//! partition of the alternative set into indifference classes, best class
//! first. The partition is encoded as a class-assignment vector: entry `i`
//! holds the class index of alternative `i`, and a vector is valid exactly
//! when its entries cover an initial segment `0..k`. Completeness and
//! transitivity therefore hold by construction and invalid orders are
//! unrepresentable.
//!
//! The canonical enumeration used throughout the crate is lexicographic on
//! the assignment vector, which places full indifference (all zeros) first.

use crate::error::{Error, Result};

/// Largest alternative set accepted by the exhaustive order enumeration.
pub const MAX_ENUM_ALTERNATIVES: usize = 7;

const MAX_UNIVERSE: usize = 26;

/// One alternative, identified by its index into the universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Alternative(pub u8);

impl Alternative {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// The alternative set, with display labels. Ids are contiguous from zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe {
    labels: Vec<String>,
}

impl Universe {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::domain(
                "universe must contain at least one alternative",
            ));
        }
        if labels.len() > MAX_UNIVERSE {
            return Err(Error::domain(format!(
                "universe supports at most {MAX_UNIVERSE} alternatives, got {}",
                labels.len()
            )));
        }
        for label in &labels {
            validate_label(label)?;
        }
        for (i, label) in labels.iter().enumerate() {
            if labels[..i].contains(label) {
                return Err(Error::domain(format!(
                    "duplicate alternative label '{label}'"
                )));
            }
        }
        Ok(Self { labels })
    }

    /// Universe labelled `a`, `b`, `c`, ... for up to 26 alternatives.
    pub fn with_default_labels(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_UNIVERSE {
            return Err(Error::domain(format!(
                "default labels exist for 1..={MAX_UNIVERSE} alternatives, got {n}"
            )));
        }
        let labels = (0..n)
            .map(|i| ((b'a' + i as u8) as char).to_string())
            .collect();
        Ok(Self { labels })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn alternatives(&self) -> impl Iterator<Item = Alternative> + '_ {
        (0..self.labels.len()).map(|i| Alternative(i as u8))
    }

    pub fn contains(&self, x: Alternative) -> bool {
        x.index() < self.labels.len()
    }

    /// Panics if `x` is outside the universe.
    pub fn label(&self, x: Alternative) -> &str {
        &self.labels[x.index()]
    }

    pub fn labels(&self) -> &[String] {
        self.labels.as_slice()
    }

    pub fn find(&self, label: &str) -> Option<Alternative> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| Alternative(i as u8))
    }
}

fn validate_label(label: &str) -> Result<()> {
    if label.is_empty() {
        return Err(Error::domain("labels must be nonempty"));
    }
    if !label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(Error::domain(format!(
            "label '{label}' contains characters outside [A-Za-z0-9_]"
        )));
    }
    Ok(())
}

/// Outcome of comparing two alternatives, stated for the first argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairOrder {
    /// The first alternative is strictly preferred.
    Above,
    /// The two alternatives are indifferent.
    Tied,
    /// The second alternative is strictly preferred.
    Below,
}

impl PairOrder {
    pub fn flipped(self) -> Self {
        match self {
            PairOrder::Above => PairOrder::Below,
            PairOrder::Tied => PairOrder::Tied,
            PairOrder::Below => PairOrder::Above,
        }
    }
}

/// A weak order, stored as a class-assignment vector (class 0 is best).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeakOrder {
    assignment: Vec<u8>,
}

impl WeakOrder {
    /// Accepts a vector whose values cover an initial segment `0..k`.
    pub fn from_assignment(assignment: Vec<u8>) -> Result<Self> {
        let n = assignment.len();
        if n == 0 {
            return Err(Error::domain("weak order needs at least one alternative"));
        }
        if n > MAX_UNIVERSE {
            return Err(Error::domain(format!(
                "assignment longer than {MAX_UNIVERSE}"
            )));
        }
        let mut seen = vec![false; n];
        let mut max = 0u8;
        for &c in &assignment {
            if c as usize >= n {
                return Err(Error::domain(format!(
                    "class index {c} out of range for {n} alternatives"
                )));
            }
            seen[c as usize] = true;
            max = max.max(c);
        }
        if !seen[..=max as usize].iter().all(|&s| s) {
            return Err(Error::domain(
                "class indices must cover an initial segment 0..k",
            ));
        }
        Ok(Self { assignment })
    }

    /// Builds from explicit indifference classes, best first.
    pub fn from_classes(classes: &[Vec<Alternative>], num_alternatives: usize) -> Result<Self> {
        let mut assignment = vec![u8::MAX; num_alternatives];
        for (ci, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::domain("indifference classes must be nonempty"));
            }
            for &x in class {
                if x.index() >= num_alternatives {
                    return Err(Error::domain(format!(
                        "alternative id {} outside universe of size {num_alternatives}",
                        x.0
                    )));
                }
                if assignment[x.index()] != u8::MAX {
                    return Err(Error::domain(format!(
                        "alternative id {} appears in two classes",
                        x.0
                    )));
                }
                assignment[x.index()] = ci as u8;
            }
        }
        if assignment.contains(&u8::MAX) {
            return Err(Error::domain("classes must cover every alternative"));
        }
        Self::from_assignment(assignment)
    }

    /// The single-class order: everything tied.
    pub fn full_indifference(num_alternatives: usize) -> Self {
        assert!((1..=MAX_UNIVERSE).contains(&num_alternatives));
        Self {
            assignment: vec![0; num_alternatives],
        }
    }

    pub fn num_alternatives(&self) -> usize {
        self.assignment.len()
    }

    pub fn num_classes(&self) -> usize {
        *self.assignment.iter().max().expect("nonempty") as usize + 1
    }

    pub fn assignment(&self) -> &[u8] {
        &self.assignment
    }

    pub fn class_index(&self, x: Alternative) -> Result<usize> {
        self.check(x)?;
        Ok(self.assignment[x.index()] as usize)
    }

    /// Indifference classes, best first.
    pub fn classes(&self) -> Vec<Vec<Alternative>> {
        let mut out = vec![Vec::new(); self.num_classes()];
        for (i, &c) in self.assignment.iter().enumerate() {
            out[c as usize].push(Alternative(i as u8));
        }
        out
    }

    pub fn compare(&self, x: Alternative, y: Alternative) -> Result<PairOrder> {
        self.check(x)?;
        self.check(y)?;
        let cx = self.assignment[x.index()];
        let cy = self.assignment[y.index()];
        Ok(match cx.cmp(&cy) {
            std::cmp::Ordering::Less => PairOrder::Above,
            std::cmp::Ordering::Equal => PairOrder::Tied,
            std::cmp::Ordering::Greater => PairOrder::Below,
        })
    }

    /// The order's restriction to a pair, read as a two-alternative order.
    pub fn restrict_to_pair(&self, a: Alternative, b: Alternative) -> Result<PairOrder> {
        if a == b {
            return Err(Error::domain("restriction needs two distinct alternatives"));
        }
        self.compare(a, b)
    }

    /// True when every indifference class is a singleton.
    pub fn is_strict(&self) -> bool {
        self.num_classes() == self.assignment.len()
    }

    fn check(&self, x: Alternative) -> Result<()> {
        if x.index() >= self.assignment.len() {
            return Err(Error::domain(format!(
                "alternative id {} outside universe of size {}",
                x.0,
                self.assignment.len()
            )));
        }
        Ok(())
    }
}

/// All weak orders over the universe, lexicographic on the assignment vector.
pub fn enumerate_weak_orders(universe: &Universe) -> Result<Vec<WeakOrder>> {
    let n = universe.len();
    if n > MAX_ENUM_ALTERNATIVES {
        return Err(Error::resource(format!(
            "order enumeration is bounded at {MAX_ENUM_ALTERNATIVES} alternatives, got {n}"
        )));
    }
    let mut out = Vec::new();
    let mut digits = vec![0u8; n];
    loop {
        if covers_initial_segment(&digits) {
            out.push(WeakOrder {
                assignment: digits.clone(),
            });
        }
        // Odometer over {0..n-1}^n in lexicographic order.
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            if digits[pos] as usize + 1 < n {
                digits[pos] += 1;
                for d in &mut digits[pos + 1..] {
                    *d = 0;
                }
                break;
            }
        }
    }
}

fn covers_initial_segment(digits: &[u8]) -> bool {
    let mut seen = [false; MAX_ENUM_ALTERNATIVES];
    let mut max = 0u8;
    for &d in digits {
        seen[d as usize] = true;
        max = max.max(d);
    }
    seen[..=max as usize].iter().all(|&s| s)
}

/// The strict orders, in the same canonical enumeration order.
pub fn enumerate_strict_orders(universe: &Universe) -> Result<Vec<WeakOrder>> {
    Ok(enumerate_weak_orders(universe)?
        .into_iter()
        .filter(|w| w.is_strict())
        .collect())
}

/// The two strict test orders used for committee membership probes:
/// `a > b > rest` and `b > a > rest`, tail in ascending id order.
pub fn canonical_strict_pair(
    a: Alternative,
    b: Alternative,
    universe: &Universe,
) -> Result<(WeakOrder, WeakOrder)> {
    if a == b {
        return Err(Error::domain(
            "canonical strict pair needs distinct alternatives",
        ));
    }
    let n = universe.len();
    if !universe.contains(a) || !universe.contains(b) {
        return Err(Error::domain("pair outside universe"));
    }
    let mut first = vec![0u8; n];
    let mut second = vec![0u8; n];
    let mut next = 2u8;
    for i in 0..n {
        let x = Alternative(i as u8);
        if x == a {
            first[i] = 0;
            second[i] = 1;
        } else if x == b {
            first[i] = 1;
            second[i] = 0;
        } else {
            first[i] = next;
            second[i] = next;
            next += 1;
        }
    }
    Ok((
        WeakOrder { assignment: first },
        WeakOrder { assignment: second },
    ))
}

/// Renders classes joined by `~` within and `>` between, e.g. `a~b>c`.
pub fn format_order(w: &WeakOrder, universe: &Universe) -> String {
    w.classes()
        .iter()
        .map(|class| {
            class
                .iter()
                .map(|&x| universe.label(x))
                .collect::<Vec<_>>()
                .join("~")
        })
        .collect::<Vec<_>>()
        .join(">")
}

pub fn parse_order(text: &str, universe: &Universe) -> Result<WeakOrder> {
    parse_order_at(text, 1, 1, universe)
}

/// Parses `a~b>c` with error positions offset by `line` and `col0`.
pub(crate) fn parse_order_at(
    text: &str,
    line: usize,
    col0: usize,
    universe: &Universe,
) -> Result<WeakOrder> {
    let mut classes: Vec<Vec<Alternative>> = Vec::new();
    let mut seen = vec![false; universe.len()];
    for (class_off, class_text) in split_with_offsets(text, '>') {
        let mut class = Vec::new();
        for (tok_off, raw) in split_with_offsets(class_text, '~') {
            let trimmed = raw.trim();
            let lead = raw.len() - raw.trim_start().len();
            let col = col0 + class_off + tok_off + lead;
            if trimmed.is_empty() {
                return Err(Error::parse(line, col, "empty alternative label"));
            }
            let alt = universe.find(trimmed).ok_or_else(|| {
                Error::parse(line, col, format!("unknown alternative '{trimmed}'"))
            })?;
            if seen[alt.index()] {
                return Err(Error::parse(
                    line,
                    col,
                    format!("alternative '{trimmed}' listed twice"),
                ));
            }
            seen[alt.index()] = true;
            class.push(alt);
        }
        classes.push(class);
    }
    if let Some(missing) = seen.iter().position(|&s| !s) {
        return Err(Error::parse(
            line,
            col0,
            format!(
                "order does not mention alternative '{}'",
                universe.label(Alternative(missing as u8))
            ),
        ));
    }
    WeakOrder::from_classes(&classes, universe.len())
        .map_err(|e| Error::parse(line, col0, e.to_string()))
}

/// Splits on `sep`, yielding each piece with its byte offset in `text`.
pub(crate) fn split_with_offsets(text: &str, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in text.char_indices() {
        if c == sep {
            out.push((start, &text[start..i]));
            start = i + c.len_utf8();
        }
    }
    out.push((start, &text[start..]));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn universe(n: usize) -> Universe {
        Universe::with_default_labels(n).unwrap()
    }

    /// Independent count of ordered set partitions:
    /// f(n) = sum over nonempty top classes of size k of C(n,k) * f(n-k).
    fn ordered_partition_count(n: usize) -> usize {
        fn binom(n: usize, k: usize) -> usize {
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        }
        if n == 0 {
            return 1;
        }
        (1..=n)
            .map(|k| binom(n, k) * ordered_partition_count(n - k))
            .sum()
    }

    #[test]
    fn enumeration_counts_match_recursive_oracle() {
        for n in 1..=4 {
            let orders = enumerate_weak_orders(&universe(n)).unwrap();
            assert_eq!(orders.len(), ordered_partition_count(n), "|A| = {n}");
        }
        assert_eq!(ordered_partition_count(1), 1);
        assert_eq!(ordered_partition_count(2), 3);
        assert_eq!(ordered_partition_count(3), 13);
        assert_eq!(ordered_partition_count(4), 75);
    }

    #[test]
    fn enumeration_is_lexicographic_and_duplicate_free() {
        let orders = enumerate_weak_orders(&universe(3)).unwrap();
        for pair in orders.windows(2) {
            assert!(pair[0].assignment() < pair[1].assignment());
        }
        // Full indifference is the lexicographic minimum.
        assert_eq!(orders[0], WeakOrder::full_indifference(3));
    }

    #[test]
    fn enumeration_bounds() {
        assert!(matches!(
            enumerate_weak_orders(&universe(MAX_ENUM_ALTERNATIVES + 1)),
            Err(Error::Resource(_))
        ));
        assert!(matches!(
            Universe::with_default_labels(0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(Universe::new(vec![]), Err(Error::Domain(_))));
    }

    #[test]
    fn strict_orders_are_permutations() {
        let strict = enumerate_strict_orders(&universe(3)).unwrap();
        assert_eq!(strict.len(), 6);
        assert!(strict.iter().all(|w| w.is_strict()));
    }

    #[test]
    fn assignment_validation() {
        assert!(WeakOrder::from_assignment(vec![0, 0, 1]).is_ok());
        assert!(WeakOrder::from_assignment(vec![1, 0]).is_ok());
        // Skips class 1.
        assert!(matches!(
            WeakOrder::from_assignment(vec![0, 2, 2]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            WeakOrder::from_assignment(vec![1, 1]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            WeakOrder::from_assignment(vec![]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn compare_follows_class_positions() {
        let u = universe(3);
        let (a, b, c) = (Alternative(0), Alternative(1), Alternative(2));
        // a~b>c
        let w = parse_order("a~b>c", &u).unwrap();
        assert_eq!(w.compare(a, b).unwrap(), PairOrder::Tied);
        assert_eq!(w.compare(a, c).unwrap(), PairOrder::Above);
        assert_eq!(w.compare(c, a).unwrap(), PairOrder::Below);
        // c>a~b
        let w = parse_order("c>a~b", &u).unwrap();
        assert_eq!(w.compare(b, c).unwrap(), PairOrder::Below);
        assert_eq!(w.compare(c, b).unwrap(), PairOrder::Above);
        assert!(matches!(
            w.compare(a, Alternative(9)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn compare_is_mirror_symmetric_and_complete() {
        let u = universe(3);
        let orders = enumerate_weak_orders(&u).unwrap();
        for w in &orders {
            for x in u.alternatives() {
                for y in u.alternatives() {
                    let xy = w.compare(x, y).unwrap();
                    let yx = w.compare(y, x).unwrap();
                    assert_eq!(xy, yx.flipped());
                    if x == y {
                        assert_eq!(xy, PairOrder::Tied);
                    }
                }
            }
        }
    }

    #[test]
    fn restriction_agrees_with_compare() {
        let u = universe(3);
        let (a, c) = (Alternative(0), Alternative(2));
        for w in enumerate_weak_orders(&u).unwrap() {
            assert_eq!(w.restrict_to_pair(a, c).unwrap(), w.compare(a, c).unwrap());
        }
        let w = WeakOrder::full_indifference(3);
        assert!(matches!(w.restrict_to_pair(a, a), Err(Error::Domain(_))));
    }

    #[test]
    fn canonical_strict_pair_layout() {
        let u = universe(3);
        let (a, b) = (Alternative(0), Alternative(1));
        let (s1, s2) = canonical_strict_pair(a, b, &u).unwrap();
        assert_eq!(format_order(&s1, &u), "a>b>c");
        assert_eq!(format_order(&s2, &u), "b>a>c");

        let u4 = universe(4);
        let (s1, s2) = canonical_strict_pair(Alternative(1), Alternative(3), &u4).unwrap();
        assert_eq!(format_order(&s1, &u4), "b>d>a>c");
        assert_eq!(format_order(&s2, &u4), "d>b>a>c");
        assert!(matches!(
            canonical_strict_pair(a, a, &u),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn format_parse_roundtrip_exhaustive() {
        for n in 1..=4 {
            let u = universe(n);
            for w in enumerate_weak_orders(&u).unwrap() {
                let text = format_order(&w, &u);
                assert_eq!(parse_order(&text, &u).unwrap(), w);
            }
        }
    }

    #[test]
    fn parse_reports_positions() {
        let u = universe(3);
        match parse_order("a~b>x", &u) {
            Err(Error::Parse { line, column, .. }) => {
                assert_eq!(line, 1);
                assert_eq!(column, 5);
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_order("a~a>b~c", &u) {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_order("a~b", &u).is_err());
        assert!(parse_order("", &u).is_err());
        assert!(parse_order("a>>b~c", &u).is_err());
        // Whitespace around tokens is tolerated.
        assert_eq!(
            parse_order(" a ~ b > c ", &u).unwrap(),
            parse_order("a~b>c", &u).unwrap()
        );
    }
}
