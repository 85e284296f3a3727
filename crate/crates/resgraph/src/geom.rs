//! Exact integer geometry for straight-line plane drawings.
//!
//! All predicates run on integer coordinates with `i128` intermediates, so
//! there is no floating point anywhere in the crate. Interior points of
//! faces are rational; [`RationalPoint`] keeps them exact and
//! [`point_in_polygon`] clears denominators before comparing.

/// Input coordinates are clamped to this grid so every intermediate product
/// (including denominator-cleared containment tests) fits in `i128`.
pub const COORD_LIMIT: i64 = 10_000;

pub type Point = (i64, i64);

/// Sign of the cross product (b - a) x (c - a): positive when `c` lies to
/// the left of the directed line a -> b.
pub fn orient(a: Point, b: Point, c: Point) -> i128 {
    let (abx, aby) = (i128::from(b.0 - a.0), i128::from(b.1 - a.1));
    let (acx, acy) = (i128::from(c.0 - a.0), i128::from(c.1 - a.1));
    abx * acy - aby * acx
}

/// True when `p` lies on the closed segment `ab`.
pub fn on_segment(p: Point, a: Point, b: Point) -> bool {
    orient(a, b, p) == 0
        && p.0 >= a.0.min(b.0)
        && p.0 <= a.0.max(b.0)
        && p.1 >= a.1.min(b.1)
        && p.1 <= a.1.max(b.1)
}

/// True when the closed segments `ab` and `cd` share at least one point.
pub fn segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool {
    let o1 = orient(a, b, c).signum();
    let o2 = orient(a, b, d).signum();
    let o3 = orient(c, d, a).signum();
    let o4 = orient(c, d, b).signum();
    if o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 {
        return true;
    }
    on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) || on_segment(b, c, d)
}

/// Twice the signed area of the closed walk `poly` (shoelace). Positive for
/// counterclockwise traversal in the usual y-up convention.
pub fn signed_area2(poly: &[Point]) -> i128 {
    let n = poly.len();
    let mut acc: i128 = 0;
    for i in 0..n {
        let (x1, y1) = poly[i];
        let (x2, y2) = poly[(i + 1) % n];
        acc += i128::from(x1) * i128::from(y2) - i128::from(x2) * i128::from(y1);
    }
    acc
}

/// An exact rational point `(x/den, y/den)` with `den > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalPoint {
    pub x: i128,
    pub y: i128,
    pub den: i128,
}

impl RationalPoint {
    pub fn from_integer(p: Point) -> Self {
        RationalPoint {
            x: i128::from(p.0),
            y: i128::from(p.1),
            den: 1,
        }
    }

    pub fn midpoint(a: Point, b: Point) -> Self {
        RationalPoint {
            x: i128::from(a.0) + i128::from(b.0),
            y: i128::from(a.1) + i128::from(b.1),
            den: 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Containment {
    Inside,
    OnBoundary,
    Outside,
}

/// Locates a rational point relative to a simple polygon, exactly.
/// Denominators are cleared by scaling the polygon, then a standard
/// ray-crossing parity count runs on integers.
pub fn point_in_polygon(p: RationalPoint, poly: &[Point]) -> Containment {
    debug_assert!(p.den > 0);
    let scaled: Vec<(i128, i128)> = poly
        .iter()
        .map(|&(x, y)| (i128::from(x) * p.den, i128::from(y) * p.den))
        .collect();
    let (px, py) = (p.x, p.y);

    let cross = |a: (i128, i128), b: (i128, i128), c: (i128, i128)| -> i128 {
        (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
    };

    let mut inside = false;
    let n = scaled.len();
    for i in 0..n {
        let a = scaled[i];
        let b = scaled[(i + 1) % n];
        if cross(a, b, (px, py)) == 0
            && px >= a.0.min(b.0)
            && px <= a.0.max(b.0)
            && py >= a.1.min(b.1)
            && py <= a.1.max(b.1)
        {
            return Containment::OnBoundary;
        }
        if (a.1 > py) != (b.1 > py) {
            let o = cross(a, b, (px, py));
            if (b.1 > a.1 && o > 0) || (b.1 < a.1 && o < 0) {
                inside = !inside;
            }
        }
    }
    if inside {
        Containment::Inside
    } else {
        Containment::Outside
    }
}

/// An exact point strictly inside a simple polygon. Tries the polygon
/// centroid first; for non-convex faces where the centroid escapes, falls
/// back to the centroid of an ear triangle.
pub fn interior_point(poly: &[Point]) -> Option<RationalPoint> {
    let area2 = signed_area2(poly);
    if area2 == 0 {
        return None;
    }

    let mut cx: i128 = 0;
    let mut cy: i128 = 0;
    let n = poly.len();
    for i in 0..n {
        let (x1, y1) = poly[i];
        let (x2, y2) = poly[(i + 1) % n];
        let w = i128::from(x1) * i128::from(y2) - i128::from(x2) * i128::from(y1);
        cx += (i128::from(x1) + i128::from(x2)) * w;
        cy += (i128::from(y1) + i128::from(y2)) * w;
    }
    let mut den = 3 * area2;
    if den < 0 {
        cx = -cx;
        cy = -cy;
        den = -den;
    }
    let centroid = RationalPoint { x: cx, y: cy, den };
    if point_in_polygon(centroid, poly) == Containment::Inside {
        return Some(centroid);
    }

    // Ear fallback: a convex corner whose triangle contains no other
    // polygon vertex; the triangle centroid is strictly interior.
    let turn = area2.signum();
    for i in 0..n {
        let a = poly[(i + n - 1) % n];
        let b = poly[i];
        let c = poly[(i + 1) % n];
        if orient(a, b, c).signum() != turn {
            continue;
        }
        let blocked = poly.iter().enumerate().any(|(j, &q)| {
            j != (i + n - 1) % n
                && j != i
                && j != (i + 1) % n
                && (orient(a, b, q).signum() == turn || on_segment(q, a, b))
                && (orient(b, c, q).signum() == turn || on_segment(q, b, c))
                && (orient(c, a, q).signum() == turn || on_segment(q, c, a))
        });
        if blocked {
            continue;
        }
        let cand = RationalPoint {
            x: i128::from(a.0) + i128::from(b.0) + i128::from(c.0),
            y: i128::from(a.1) + i128::from(b.1) + i128::from(c.1),
            den: 3,
        };
        if point_in_polygon(cand, poly) == Containment::Inside {
            return Some(cand);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQUARE: [Point; 4] = [(0, 0), (4, 0), (4, 4), (0, 4)];

    #[test]
    fn orientation_signs() {
        assert!(orient((0, 0), (1, 0), (0, 1)) > 0);
        assert!(orient((0, 0), (0, 1), (1, 0)) < 0);
        assert_eq!(orient((0, 0), (2, 2), (1, 1)), 0);
    }

    #[test]
    fn area_sign_follows_traversal() {
        assert_eq!(signed_area2(&SQUARE), 32);
        let cw: Vec<Point> = SQUARE.iter().rev().copied().collect();
        assert_eq!(signed_area2(&cw), -32);
    }

    #[test]
    fn segment_intersection_cases() {
        // proper crossing
        assert!(segments_intersect((0, 0), (4, 4), (0, 4), (4, 0)));
        // shared endpoint only
        assert!(segments_intersect((0, 0), (2, 0), (2, 0), (4, 0)));
        // disjoint
        assert!(!segments_intersect((0, 0), (1, 0), (2, 1), (3, 1)));
        // collinear overlap
        assert!(segments_intersect((0, 0), (3, 0), (1, 0), (5, 0)));
    }

    #[test]
    fn containment_trichotomy() {
        let inside = RationalPoint::from_integer((1, 1));
        let edge = RationalPoint::from_integer((2, 0));
        let outside = RationalPoint::from_integer((5, 5));
        assert_eq!(point_in_polygon(inside, &SQUARE), Containment::Inside);
        assert_eq!(point_in_polygon(edge, &SQUARE), Containment::OnBoundary);
        assert_eq!(point_in_polygon(outside, &SQUARE), Containment::Outside);
    }

    #[test]
    fn rational_point_containment() {
        // (1/2, 1/2) inside the square, (9/2, 1/2) outside.
        let near_corner = RationalPoint { x: 1, y: 1, den: 2 };
        let past_edge = RationalPoint { x: 9, y: 1, den: 2 };
        assert_eq!(point_in_polygon(near_corner, &SQUARE), Containment::Inside);
        assert_eq!(point_in_polygon(past_edge, &SQUARE), Containment::Outside);
    }

    #[test]
    fn interior_point_of_convex_and_reflex_polygons() {
        let p = interior_point(&SQUARE).unwrap();
        assert_eq!(point_in_polygon(p, &SQUARE), Containment::Inside);

        // L-shaped hexagon whose centroid still lies inside.
        let ell: Vec<Point> = vec![(0, 0), (4, 0), (4, 2), (2, 2), (2, 6), (0, 6)];
        let p = interior_point(&ell).unwrap();
        assert_eq!(point_in_polygon(p, &ell), Containment::Inside);

        // U-shape: centroid of the bounding region sits in the notch, the
        // ear fallback must still produce an interior point.
        let u: Vec<Point> = vec![
            (0, 0),
            (10, 0),
            (10, 10),
            (8, 10),
            (8, 2),
            (2, 2),
            (2, 10),
            (0, 10),
        ];
        let p = interior_point(&u).unwrap();
        assert_eq!(point_in_polygon(p, &u), Containment::Inside);
    }

    #[test]
    fn degenerate_polygon_has_no_interior() {
        let flat: Vec<Point> = vec![(0, 0), (2, 0), (4, 0)];
        assert!(interior_point(&flat).is_none());
    }
}
