//! Factor complexity of quadratic Parry fixed points: the T-map, the
//! U/V towers of maximal left special and total bispecial factors, special
//! factors, and `C(n)` by enumeration or by the interval formula.

mod special;
mod table;
mod tower;

pub use special::{left_special_factors, special_factors, SpecialFactorReport};
pub use table::{
    closed_form_complexity, closed_form_complexity_with, closed_form_delta_c, factor_complexity,
    oracle_complexity, ComplexityRow, ComplexityTable, Mode,
};
pub use tower::{t_map, uv_tower, uv_tower_covering, TowerLevel, UVTower, DEFAULT_MATERIALIZE_CAP};
