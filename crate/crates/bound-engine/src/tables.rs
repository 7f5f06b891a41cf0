//! Bound polynomials in the block variable `p`, stored as monomials
//! `(num, den, e_r, e_s, e_k, e_p)` meaning `num/den · r^e_r s^e_s k^e_k p^e_p`.
//!
//! C family (scale `6Δ`), D family (scale `2Δ₁`), E family (scale `2Δ₂`).
//! D0 carries the p-coefficient of the worked example for `(r,s) = (9,2)`;
//! E2 uses the `2X` form shared by E0 and E1 (see the project README).

/// `(num, den, e_r, e_s, e_k, e_p)`.
pub(crate) type Monomial = (i64, i64, u32, u32, u32, u32);

/// C0 at t₄,ₚ₋₁.
pub(crate) const C0: &[Monomial] = &[
    (2, 1, 0, 3, 0, 1),
    (6, 1, 0, 3, 1, 1),
    (-12, 1, 0, 3, 2, 1),
    (-24, 1, 0, 6, 0, 1),
    (24, 1, 0, 10, 0, 1),
    (13, 1, 1, 2, 0, 1),
    (-33, 1, 1, 2, 1, 1),
    (12, 1, 1, 2, 3, 1),
    (72, 1, 1, 5, 0, 1),
    (-120, 1, 1, 9, 0, 1),
    (-36, 1, 2, 1, 0, 1),
    (15, 1, 2, 1, 1, 1),
    (33, 1, 2, 1, 2, 1),
    (-6, 1, 2, 1, 3, 1),
    (120, 1, 2, 8, 0, 1),
    (-120, 1, 3, 3, 0, 1),
    (240, 1, 3, 7, 0, 1),
    (24, 1, 4, 2, 0, 1),
    (-408, 1, 4, 6, 0, 1),
    (48, 1, 5, 1, 0, 1),
    (-120, 1, 5, 5, 0, 1),
    (360, 1, 6, 4, 0, 1),
    (-96, 1, 8, 2, 0, 1),
    (12, 1, 0, 3, 0, 2),
    (-36, 1, 0, 3, 1, 2),
    (-66, 1, 1, 2, 0, 2),
    (18, 1, 1, 2, 1, 2),
    (36, 1, 1, 2, 2, 2),
    (30, 1, 2, 1, 0, 2),
    (33, 1, 2, 1, 1, 2),
    (-18, 1, 2, 1, 2, 2),
    (12, 1, 2, 1, 3, 2),
    (-32, 1, 0, 3, 0, 3),
    (24, 1, 1, 2, 0, 3),
    (24, 1, 1, 2, 1, 3),
    (-12, 1, 2, 1, 1, 3),
    (24, 1, 2, 1, 2, 3),
    (12, 1, 2, 1, 1, 4),
];

/// C1 at t₁,ₚ.
pub(crate) const C1: &[Monomial] = &[
    (-1, 1, 0, 0, 0, 0),
    (1, 1, 0, 2, 0, 0),
    (1, 1, 0, 4, 0, 0),
    (-7, 1, 0, 6, 0, 0),
    (-6, 1, 0, 8, 0, 0),
    (6, 1, 0, 10, 0, 0),
    (6, 1, 1, 0, 0, 0),
    (-1, 1, 1, 1, 0, 0),
    (-2, 1, 1, 3, 0, 0),
    (-12, 1, 1, 4, 0, 0),
    (21, 1, 1, 5, 0, 0),
    (24, 1, 1, 7, 0, 0),
    (6, 1, 1, 8, 0, 0),
    (-30, 1, 1, 9, 0, 0),
    (-21, 2, 2, 0, 0, 0),
    (-1, 1, 2, 2, 0, 0),
    (24, 1, 2, 3, 0, 0),
    (19, 2, 2, 4, 0, 0),
    (-12, 1, 2, 6, 0, 0),
    (-24, 1, 2, 7, 0, 0),
    (30, 1, 2, 8, 0, 0),
    (2, 1, 3, 1, 0, 0),
    (12, 1, 3, 2, 0, 0),
    (-54, 1, 3, 3, 0, 0),
    (-48, 1, 3, 5, 0, 0),
    (12, 1, 3, 6, 0, 0),
    (60, 1, 3, 7, 0, 0),
    (-24, 1, 4, 1, 0, 0),
    (-5, 2, 4, 2, 0, 0),
    (42, 1, 4, 4, 0, 0),
    (48, 1, 4, 5, 0, 0),
    (-102, 1, 4, 6, 0, 0),
    (33, 1, 5, 1, 0, 0),
    (24, 1, 5, 3, 0, 0),
    (-42, 1, 5, 4, 0, 0),
    (-30, 1, 5, 5, 0, 0),
    (-24, 1, 6, 2, 0, 0),
    (-24, 1, 6, 3, 0, 0),
    (90, 1, 6, 4, 0, 0),
    (24, 1, 7, 2, 0, 0),
    (-24, 1, 8, 2, 0, 0),
    (2, 1, 0, 3, 0, 1),
    (-6, 1, 0, 3, 1, 1),
    (-12, 1, 0, 3, 2, 1),
    (-24, 1, 0, 6, 0, 1),
    (24, 1, 0, 10, 0, 1),
    (13, 1, 1, 2, 0, 1),
    (33, 1, 1, 2, 1, 1),
    (-12, 1, 1, 2, 3, 1),
    (72, 1, 1, 5, 0, 1),
    (-120, 1, 1, 9, 0, 1),
    (-36, 1, 2, 1, 0, 1),
    (-15, 1, 2, 1, 1, 1),
    (33, 1, 2, 1, 2, 1),
    (6, 1, 2, 1, 3, 1),
    (120, 1, 2, 8, 0, 1),
    (-120, 1, 3, 3, 0, 1),
    (240, 1, 3, 7, 0, 1),
    (24, 1, 4, 2, 0, 1),
    (-408, 1, 4, 6, 0, 1),
    (48, 1, 5, 1, 0, 1),
    (-120, 1, 5, 5, 0, 1),
    (360, 1, 6, 4, 0, 1),
    (-96, 1, 8, 2, 0, 1),
    (-12, 1, 0, 3, 0, 2),
    (-36, 1, 0, 3, 1, 2),
    (66, 1, 1, 2, 0, 2),
    (18, 1, 1, 2, 1, 2),
    (-36, 1, 1, 2, 2, 2),
    (-30, 1, 2, 1, 0, 2),
    (33, 1, 2, 1, 1, 2),
    (18, 1, 2, 1, 2, 2),
    (12, 1, 2, 1, 3, 2),
    (-32, 1, 0, 3, 0, 3),
    (24, 1, 1, 2, 0, 3),
    (-24, 1, 1, 2, 1, 3),
    (12, 1, 2, 1, 1, 3),
    (24, 1, 2, 1, 2, 3),
    (12, 1, 2, 1, 1, 4),
];

/// C2 at t₂,ₚ.
pub(crate) const C2: &[Monomial] = &[
    (4, 1, 0, 3, 1, 0),
    (12, 1, 0, 3, 2, 0),
    (8, 1, 0, 3, 3, 0),
    (-12, 1, 0, 6, 0, 0),
    (12, 1, 0, 10, 0, 0),
    (7, 1, 1, 2, 0, 0),
    (26, 1, 1, 2, 1, 0),
    (24, 1, 1, 2, 2, 0),
    (36, 1, 1, 5, 0, 0),
    (-60, 1, 1, 9, 0, 0),
    (21, 2, 2, 1, 0, 0),
    (21, 1, 2, 1, 1, 0),
    (60, 1, 2, 8, 0, 0),
    (-60, 1, 3, 3, 0, 0),
    (120, 1, 3, 7, 0, 0),
    (12, 1, 4, 2, 0, 0),
    (-204, 1, 4, 6, 0, 0),
    (24, 1, 5, 1, 0, 0),
    (-60, 1, 5, 5, 0, 0),
    (180, 1, 6, 4, 0, 0),
    (-48, 1, 8, 2, 0, 0),
    (10, 1, 0, 3, 0, 1),
    (42, 1, 0, 3, 1, 1),
    (36, 1, 0, 3, 2, 1),
    (-24, 1, 0, 6, 0, 1),
    (24, 1, 0, 10, 0, 1),
    (35, 1, 1, 2, 0, 1),
    (63, 1, 1, 2, 1, 1),
    (12, 1, 1, 2, 3, 1),
    (72, 1, 1, 5, 0, 1),
    (-120, 1, 1, 9, 0, 1),
    (6, 1, 2, 1, 0, 1),
    (-15, 1, 2, 1, 1, 1),
    (33, 1, 2, 1, 2, 1),
    (6, 1, 2, 1, 3, 1),
    (120, 1, 2, 8, 0, 1),
    (-120, 1, 3, 3, 0, 1),
    (240, 1, 3, 7, 0, 1),
    (24, 1, 4, 2, 0, 1),
    (-408, 1, 4, 6, 0, 1),
    (48, 1, 5, 1, 0, 1),
    (-120, 1, 5, 5, 0, 1),
    (360, 1, 6, 4, 0, 1),
    (-96, 1, 8, 2, 0, 1),
    (36, 1, 0, 3, 0, 2),
    (60, 1, 0, 3, 1, 2),
    (30, 1, 1, 2, 0, 2),
    (-18, 1, 1, 2, 1, 2),
    (36, 1, 1, 2, 2, 2),
    (-30, 1, 2, 1, 0, 2),
    (33, 1, 2, 1, 1, 2),
    (18, 1, 2, 1, 2, 2),
    (12, 1, 2, 1, 3, 2),
    (32, 1, 0, 3, 0, 3),
    (-24, 1, 1, 2, 0, 3),
    (24, 1, 1, 2, 1, 3),
    (12, 1, 2, 1, 1, 3),
    (24, 1, 2, 1, 2, 3),
    (12, 1, 2, 1, 1, 4),
];

/// C3 at t₃,ₚ.
pub(crate) const C3: &[Monomial] = &[
    (-1, 1, 0, 0, 0, 0),
    (1, 1, 0, 2, 0, 0),
    (6, 1, 0, 3, 0, 0),
    (22, 1, 0, 3, 1, 0),
    (24, 1, 0, 3, 2, 0),
    (8, 1, 0, 3, 3, 0),
    (1, 1, 0, 4, 0, 0),
    (-19, 1, 0, 6, 0, 0),
    (-6, 1, 0, 8, 0, 0),
    (18, 1, 0, 10, 0, 0),
    (6, 1, 1, 0, 0, 0),
    (-1, 1, 1, 1, 0, 0),
    (-26, 1, 1, 2, 0, 0),
    (-79, 1, 1, 2, 1, 0),
    (-60, 1, 1, 2, 2, 0),
    (-12, 1, 1, 2, 3, 0),
    (-2, 1, 1, 3, 0, 0),
    (-12, 1, 1, 4, 0, 0),
    (57, 1, 1, 5, 0, 0),
    (24, 1, 1, 7, 0, 0),
    (6, 1, 1, 8, 0, 0),
    (-90, 1, 1, 9, 0, 0),
    (-21, 2, 2, 0, 0, 0),
    (51, 2, 2, 1, 0, 0),
    (69, 1, 2, 1, 1, 0),
    (39, 1, 2, 1, 2, 0),
    (6, 1, 2, 1, 3, 0),
    (-1, 1, 2, 2, 0, 0),
    (24, 1, 2, 3, 0, 0),
    (19, 2, 2, 4, 0, 0),
    (-12, 1, 2, 6, 0, 0),
    (-24, 1, 2, 7, 0, 0),
    (90, 1, 2, 8, 0, 0),
    (2, 1, 3, 1, 0, 0),
    (12, 1, 3, 2, 0, 0),
    (-114, 1, 3, 3, 0, 0),
    (-48, 1, 3, 5, 0, 0),
    (12, 1, 3, 6, 0, 0),
    (180, 1, 3, 7, 0, 0),
    (-24, 1, 4, 1, 0, 0),
    (19, 2, 4, 2, 0, 0),
    (42, 1, 4, 4, 0, 0),
    (48, 1, 4, 5, 0, 0),
    (-306, 1, 4, 6, 0, 0),
    (57, 1, 5, 1, 0, 0),
    (24, 1, 5, 3, 0, 0),
    (-42, 1, 5, 4, 0, 0),
    (-90, 1, 5, 5, 0, 0),
    (-24, 1, 6, 2, 0, 0),
    (-24, 1, 6, 3, 0, 0),
    (270, 1, 6, 4, 0, 0),
    (24, 1, 7, 2, 0, 0),
    (-72, 1, 8, 2, 0, 0),
    (34, 1, 0, 3, 0, 1),
    (78, 1, 0, 3, 1, 1),
    (36, 1, 0, 3, 2, 1),
    (-24, 1, 0, 6, 0, 1),
    (24, 1, 0, 10, 0, 1),
    (-97, 1, 1, 2, 0, 1),
    (-171, 1, 1, 2, 1, 1),
    (-72, 1, 1, 2, 2, 1),
    (-12, 1, 1, 2, 3, 1),
    (72, 1, 1, 5, 0, 1),
    (-120, 1, 1, 9, 0, 1),
    (66, 1, 2, 1, 0, 1),
    (93, 1, 2, 1, 1, 1),
    (69, 1, 2, 1, 2, 1),
    (18, 1, 2, 1, 3, 1),
    (120, 1, 2, 8, 0, 1),
    (-120, 1, 3, 3, 0, 1),
    (240, 1, 3, 7, 0, 1),
    (24, 1, 4, 2, 0, 1),
    (-408, 1, 4, 6, 0, 1),
    (48, 1, 5, 1, 0, 1),
    (-120, 1, 5, 5, 0, 1),
    (360, 1, 6, 4, 0, 1),
    (-96, 1, 8, 2, 0, 1),
    (60, 1, 0, 3, 0, 2),
    (60, 1, 0, 3, 1, 2),
    (-102, 1, 1, 2, 0, 2),
    (-90, 1, 1, 2, 1, 2),
    (-36, 1, 1, 2, 2, 2),
    (30, 1, 2, 1, 0, 2),
    (69, 1, 2, 1, 1, 2),
    (54, 1, 2, 1, 2, 2),
    (12, 1, 2, 1, 3, 2),
    (32, 1, 0, 3, 0, 3),
    (-24, 1, 1, 2, 0, 3),
    (-24, 1, 1, 2, 1, 3),
    (36, 1, 2, 1, 1, 3),
    (24, 1, 2, 1, 2, 3),
    (12, 1, 2, 1, 1, 4),
];

/// D0 at t₁,ₚ.
pub(crate) const D0: &[Monomial] = &[
    (-4, 1, 0, 2, 0, 1),
    (4, 1, 0, 2, 1, 1),
    (2, 1, 0, 3, 0, 1),
    (-4, 1, 0, 5, 0, 1),
    (-2, 1, 1, 1, 0, 1),
    (-2, 1, 1, 1, 1, 1),
    (4, 1, 1, 1, 2, 1),
    (4, 1, 1, 4, 0, 1),
    (-2, 1, 2, 1, 0, 1),
    (4, 1, 2, 3, 0, 1),
    (-4, 1, 3, 2, 0, 1),
    (8, 1, 0, 2, 0, 2),
    (-4, 1, 1, 1, 0, 2),
    (4, 1, 1, 1, 1, 2),
];

/// D1 at t₁,ₚ.
pub(crate) const D1: &[Monomial] = &[
    (-2, 1, 0, 0, 0, 0),
    (2, 1, 0, 1, 0, 0),
    (-2, 1, 0, 2, 0, 0),
    (2, 1, 0, 3, 0, 0),
    (-2, 1, 0, 5, 0, 0),
    (3, 1, 1, 0, 0, 0),
    (2, 1, 1, 1, 0, 0),
    (-1, 1, 1, 3, 0, 0),
    (2, 1, 1, 4, 0, 0),
    (-2, 1, 2, 1, 0, 0),
    (2, 1, 2, 3, 0, 0),
    (1, 1, 3, 1, 0, 0),
    (-2, 1, 3, 2, 0, 0),
    (-8, 1, 0, 2, 0, 1),
    (4, 1, 0, 2, 1, 1),
    (4, 1, 0, 3, 0, 1),
    (-8, 1, 0, 5, 0, 1),
    (2, 1, 1, 1, 0, 1),
    (-2, 1, 1, 1, 1, 1),
    (4, 1, 1, 1, 2, 1),
    (8, 1, 1, 4, 0, 1),
    (-4, 1, 2, 1, 0, 1),
    (8, 1, 2, 3, 0, 1),
    (-8, 1, 3, 2, 0, 1),
    (8, 1, 0, 2, 0, 2),
    (-4, 1, 1, 1, 0, 2),
    (4, 1, 1, 1, 1, 2),
];

/// D2 at t₂,ₚ.
pub(crate) const D2: &[Monomial] = &[
    (-2, 1, 0, 2, 0, 0),
    (6, 1, 0, 2, 1, 0),
    (4, 1, 0, 2, 2, 0),
    (2, 1, 0, 3, 0, 0),
    (-4, 1, 0, 5, 0, 0),
    (6, 1, 1, 1, 0, 0),
    (4, 1, 1, 1, 1, 0),
    (4, 1, 1, 4, 0, 0),
    (-2, 1, 2, 1, 0, 0),
    (4, 1, 2, 3, 0, 0),
    (-4, 1, 3, 2, 0, 0),
    (12, 1, 0, 2, 1, 1),
    (4, 1, 0, 3, 0, 1),
    (-8, 1, 0, 5, 0, 1),
    (10, 1, 1, 1, 0, 1),
    (-2, 1, 1, 1, 1, 1),
    (4, 1, 1, 1, 2, 1),
    (8, 1, 1, 4, 0, 1),
    (-4, 1, 2, 1, 0, 1),
    (8, 1, 2, 3, 0, 1),
    (-8, 1, 3, 2, 0, 1),
    (8, 1, 0, 2, 0, 2),
    (-4, 1, 1, 1, 0, 2),
    (4, 1, 1, 1, 1, 2),
];

/// D3 at t₃,ₚ.
pub(crate) const D3: &[Monomial] = &[
    (-8, 1, 1, 2, 0, 0),
    (-6, 1, 1, 2, 1, 0),
    (-4, 1, 1, 2, 2, 0),
    (4, 1, 1, 3, 0, 0),
    (-6, 1, 1, 5, 0, 0),
    (-1, 1, 2, 0, 0, 0),
    (10, 1, 2, 1, 0, 0),
    (10, 1, 2, 1, 1, 0),
    (4, 1, 2, 1, 2, 0),
    (-1, 1, 2, 3, 0, 0),
    (6, 1, 2, 4, 0, 0),
    (-4, 1, 3, 1, 0, 0),
    (6, 1, 3, 3, 0, 0),
    (1, 1, 4, 1, 0, 0),
    (-6, 1, 4, 2, 0, 0),
    (-16, 1, 1, 2, 0, 1),
    (-12, 1, 1, 2, 1, 1),
    (4, 1, 1, 3, 0, 1),
    (-8, 1, 1, 5, 0, 1),
    (18, 1, 2, 1, 0, 1),
    (10, 1, 2, 1, 1, 1),
    (4, 1, 2, 1, 2, 1),
    (8, 1, 2, 4, 0, 1),
    (-4, 1, 3, 1, 0, 1),
    (8, 1, 3, 3, 0, 1),
    (-8, 1, 4, 2, 0, 1),
    (-8, 1, 1, 2, 0, 2),
    (4, 1, 2, 1, 0, 2),
    (4, 1, 2, 1, 1, 2),
];

/// D3 at t₄,ₚ.
pub(crate) const D4: &[Monomial] = &[
    (-14, 1, 1, 2, 0, 0),
    (-4, 1, 1, 2, 1, 0),
    (4, 1, 1, 3, 0, 0),
    (-6, 1, 1, 5, 0, 0),
    (-1, 1, 2, 0, 0, 0),
    (4, 1, 2, 1, 0, 0),
    (6, 1, 2, 1, 1, 0),
    (4, 1, 2, 1, 2, 0),
    (-1, 1, 2, 3, 0, 0),
    (6, 1, 2, 4, 0, 0),
    (-4, 1, 3, 1, 0, 0),
    (6, 1, 3, 3, 0, 0),
    (1, 1, 4, 1, 0, 0),
    (-6, 1, 4, 2, 0, 0),
    (-24, 1, 1, 2, 0, 1),
    (-4, 1, 1, 2, 1, 1),
    (4, 1, 1, 3, 0, 1),
    (-8, 1, 1, 5, 0, 1),
    (10, 1, 2, 1, 0, 1),
    (10, 1, 2, 1, 1, 1),
    (4, 1, 2, 1, 2, 1),
    (8, 1, 2, 4, 0, 1),
    (-4, 1, 3, 1, 0, 1),
    (8, 1, 3, 3, 0, 1),
    (-8, 1, 4, 2, 0, 1),
    (-8, 1, 1, 2, 0, 2),
    (4, 1, 2, 1, 0, 2),
    (4, 1, 2, 1, 1, 2),
];

/// D1 at its vertex.
pub(crate) const D5: &[Monomial] = &[
    (-2, 1, 0, 0, 0, 0),
    (2, 1, 0, 1, 0, 0),
    (-9, 4, 0, 2, 0, 0),
    (2, 1, 0, 3, 0, 0),
    (-2, 1, 0, 5, 0, 0),
    (3, 1, 1, 0, 0, 0),
    (1, 1, 1, 1, 0, 0),
    (-1, 1, 1, 3, 0, 0),
    (2, 1, 1, 4, 0, 0),
    (-1, 1, 2, 0, 0, 0),
    (-2, 1, 2, 1, 0, 0),
    (2, 1, 2, 3, 0, 0),
    (1, 1, 3, 1, 0, 0),
    (-2, 1, 3, 2, 0, 0),
    (-6, 1, 0, 2, 0, 1),
    (4, 1, 0, 2, 1, 1),
    (4, 1, 0, 3, 0, 1),
    (-8, 1, 0, 5, 0, 1),
    (6, 1, 1, 1, 0, 1),
    (-2, 1, 1, 1, 1, 1),
    (4, 1, 1, 1, 2, 1),
    (8, 1, 1, 4, 0, 1),
    (-4, 1, 2, 1, 0, 1),
    (8, 1, 2, 3, 0, 1),
    (-8, 1, 3, 2, 0, 1),
    (4, 1, 0, 2, 0, 2),
    (-4, 1, 1, 1, 0, 2),
    (4, 1, 1, 1, 1, 2),
];

/// E0 at t₁,ₚ.
pub(crate) const E0: &[Monomial] = &[
    (-4, 1, 0, 2, 0, 1),
    (4, 1, 0, 2, 1, 1),
    (-4, 1, 0, 3, 0, 1),
    (8, 1, 0, 5, 0, 1),
    (-2, 1, 1, 1, 1, 1),
    (4, 1, 1, 1, 2, 1),
    (12, 1, 1, 2, 0, 1),
    (-32, 1, 1, 4, 0, 1),
    (-8, 1, 2, 1, 0, 1),
    (40, 1, 2, 3, 0, 1),
    (-16, 1, 3, 2, 0, 1),
    (8, 1, 0, 2, 0, 2),
    (-4, 1, 1, 1, 0, 2),
    (4, 1, 1, 1, 1, 2),
];

/// E1 at t₁,ₚ.
pub(crate) const E1: &[Monomial] = &[
    (-2, 1, 0, 0, 0, 0),
    (-2, 1, 0, 1, 0, 0),
    (-2, 1, 0, 2, 0, 0),
    (-2, 1, 0, 3, 0, 0),
    (2, 1, 0, 5, 0, 0),
    (5, 1, 1, 0, 0, 0),
    (2, 1, 1, 1, 0, 0),
    (6, 1, 1, 2, 0, 0),
    (1, 1, 1, 3, 0, 0),
    (-8, 1, 1, 4, 0, 0),
    (-4, 1, 2, 1, 0, 0),
    (-3, 1, 2, 2, 0, 0),
    (10, 1, 2, 3, 0, 0),
    (2, 1, 3, 1, 0, 0),
    (-4, 1, 3, 2, 0, 0),
    (-4, 1, 0, 2, 0, 1),
    (4, 1, 0, 2, 1, 1),
    (-4, 1, 0, 3, 0, 1),
    (8, 1, 0, 5, 0, 1),
    (-2, 1, 1, 1, 1, 1),
    (4, 1, 1, 1, 2, 1),
    (12, 1, 1, 2, 0, 1),
    (-32, 1, 1, 4, 0, 1),
    (-8, 1, 2, 1, 0, 1),
    (40, 1, 2, 3, 0, 1),
    (-16, 1, 3, 2, 0, 1),
    (8, 1, 0, 2, 0, 2),
    (-4, 1, 1, 1, 0, 2),
    (4, 1, 1, 1, 1, 2),
];

/// E2 at t₂,ₚ.
pub(crate) const E2: &[Monomial] = &[
    (-4, 1, 0, 2, 0, 0),
    (2, 1, 0, 2, 1, 0),
    (4, 1, 0, 2, 2, 0),
    (-2, 1, 0, 3, 0, 0),
    (4, 1, 0, 5, 0, 0),
    (7, 1, 1, 1, 0, 0),
    (6, 1, 1, 1, 1, 0),
    (6, 1, 1, 2, 0, 0),
    (-16, 1, 1, 4, 0, 0),
    (-4, 1, 2, 1, 0, 0),
    (20, 1, 2, 3, 0, 0),
    (-8, 1, 3, 2, 0, 0),
    (4, 1, 0, 2, 0, 1),
    (12, 1, 0, 2, 1, 1),
    (-4, 1, 0, 3, 0, 1),
    (8, 1, 0, 5, 0, 1),
    (8, 1, 1, 1, 0, 1),
    (-2, 1, 1, 1, 1, 1),
    (4, 1, 1, 1, 2, 1),
    (12, 1, 1, 2, 0, 1),
    (-32, 1, 1, 4, 0, 1),
    (-8, 1, 2, 1, 0, 1),
    (40, 1, 2, 3, 0, 1),
    (-16, 1, 3, 2, 0, 1),
    (8, 1, 0, 2, 0, 2),
    (-4, 1, 1, 1, 0, 2),
    (4, 1, 1, 1, 1, 2),
];

/// E3 at t₃,ₚ.
pub(crate) const E3: &[Monomial] = &[
    (-10, 1, 1, 2, 0, 0),
    (-10, 1, 1, 2, 1, 0),
    (-4, 1, 1, 2, 2, 0),
    (-4, 1, 1, 3, 0, 0),
    (6, 1, 1, 5, 0, 0),
    (-1, 1, 2, 0, 0, 0),
    (11, 1, 2, 1, 0, 0),
    (12, 1, 2, 1, 1, 0),
    (4, 1, 2, 1, 2, 0),
    (12, 1, 2, 2, 0, 0),
    (1, 1, 2, 3, 0, 0),
    (-24, 1, 2, 4, 0, 0),
    (-8, 1, 3, 1, 0, 0),
    (-3, 1, 3, 2, 0, 0),
    (30, 1, 3, 3, 0, 0),
    (2, 1, 4, 1, 0, 0),
    (-12, 1, 4, 2, 0, 0),
    (-24, 1, 1, 2, 0, 1),
    (-12, 1, 1, 2, 1, 1),
    (-4, 1, 1, 3, 0, 1),
    (8, 1, 1, 5, 0, 1),
    (22, 1, 2, 1, 0, 1),
    (10, 1, 2, 1, 1, 1),
    (4, 1, 2, 1, 2, 1),
    (12, 1, 2, 2, 0, 1),
    (-32, 1, 2, 4, 0, 1),
    (-8, 1, 3, 1, 0, 1),
    (40, 1, 3, 3, 0, 1),
    (-16, 1, 4, 2, 0, 1),
    (-8, 1, 1, 2, 0, 2),
    (4, 1, 2, 1, 0, 2),
    (4, 1, 2, 1, 1, 2),
];

/// E3 at t₄,ₚ.
pub(crate) const E4: &[Monomial] = &[
    (-10, 1, 1, 2, 0, 0),
    (-4, 1, 1, 2, 1, 0),
    (-4, 1, 1, 3, 0, 0),
    (6, 1, 1, 5, 0, 0),
    (-1, 1, 2, 0, 0, 0),
    (2, 1, 2, 1, 0, 0),
    (6, 1, 2, 1, 1, 0),
    (4, 1, 2, 1, 2, 0),
    (12, 1, 2, 2, 0, 0),
    (1, 1, 2, 3, 0, 0),
    (-24, 1, 2, 4, 0, 0),
    (-8, 1, 3, 1, 0, 0),
    (-3, 1, 3, 2, 0, 0),
    (30, 1, 3, 3, 0, 0),
    (2, 1, 4, 1, 0, 0),
    (-12, 1, 4, 2, 0, 0),
    (-24, 1, 1, 2, 0, 1),
    (-4, 1, 1, 2, 1, 1),
    (-4, 1, 1, 3, 0, 1),
    (8, 1, 1, 5, 0, 1),
    (10, 1, 2, 1, 0, 1),
    (10, 1, 2, 1, 1, 1),
    (4, 1, 2, 1, 2, 1),
    (12, 1, 2, 2, 0, 1),
    (-32, 1, 2, 4, 0, 1),
    (-8, 1, 3, 1, 0, 1),
    (40, 1, 3, 3, 0, 1),
    (-16, 1, 4, 2, 0, 1),
    (-8, 1, 1, 2, 0, 2),
    (4, 1, 2, 1, 0, 2),
    (4, 1, 2, 1, 1, 2),
];

/// E1 at its vertex.
pub(crate) const E5: &[Monomial] = &[
    (-2, 1, 0, 0, 0, 0),
    (-2, 1, 0, 1, 0, 0),
    (-9, 4, 0, 2, 0, 0),
    (-2, 1, 0, 3, 0, 0),
    (2, 1, 0, 5, 0, 0),
    (5, 1, 1, 0, 0, 0),
    (7, 2, 1, 1, 0, 0),
    (6, 1, 1, 2, 0, 0),
    (1, 1, 1, 3, 0, 0),
    (-8, 1, 1, 4, 0, 0),
    (-9, 4, 2, 0, 0, 0),
    (-4, 1, 2, 1, 0, 0),
    (-3, 1, 2, 2, 0, 0),
    (10, 1, 2, 3, 0, 0),
    (2, 1, 3, 1, 0, 0),
    (-4, 1, 3, 2, 0, 0),
    (-6, 1, 0, 2, 0, 1),
    (4, 1, 0, 2, 1, 1),
    (-4, 1, 0, 3, 0, 1),
    (8, 1, 0, 5, 0, 1),
    (6, 1, 1, 1, 0, 1),
    (-2, 1, 1, 1, 1, 1),
    (4, 1, 1, 1, 2, 1),
    (12, 1, 1, 2, 0, 1),
    (-32, 1, 1, 4, 0, 1),
    (-8, 1, 2, 1, 0, 1),
    (40, 1, 2, 3, 0, 1),
    (-16, 1, 3, 2, 0, 1),
    (4, 1, 0, 2, 0, 2),
    (-4, 1, 1, 1, 0, 2),
    (4, 1, 1, 1, 1, 2),
];
