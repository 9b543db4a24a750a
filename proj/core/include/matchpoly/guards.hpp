#pragma once

namespace matchpoly {

/// Enumeration guards. Matching enumeration grows as (2n-1)!! and odd-set
/// scans as 2^order, so both are capped at desk scale. The environment
/// variable MATCHPOLY_MAX_ORDER raises both caps at the caller's risk;
/// it is read once per process.
namespace guards {

/// Largest matrix order accepted by matching enumeration (default 16).
int max_matching_order();

/// Largest matrix order accepted by odd-subset scans (default 20).
int max_subset_order();

}  // namespace guards

}  // namespace matchpoly
