// Copyright (c) 2026 the rfopt authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "rfopt/benchmark.hpp"
#include "rfopt/filter.hpp"
#include "rfopt/subspace.hpp"
#include "rfopt/weights.hpp"

namespace rfopt {

// Filter files: JSON {"q": ..., "poles": [[re,im],...], "coeffs": [...]}
// written losslessly; a CSV with header re_w,im_w,re_g,im_g and q rows is
// accepted on input. Poles are folded into the first quadrant on load.
void save_filter(const CPFilter& f, const std::string& path);
CPFilter load_filter(const std::string& path);

// Weight files: JSON {"breakpoints": [...], "values": [...]} on the
// half-axis; evenness is implicit and infinite support is rejected.
void save_weight(const WeightFunction& w, const std::string& path);
WeightFunction load_weight(const std::string& path);

// Plain text, one eigenvalue per line; sorted on load.
Spectrum load_spectrum(const std::string& path);

// Matrix Market coordinate (real symmetric / complex hermitian) or a dense
// text format: first line n, then n rows of n "re im" pairs.
DenseHermitian load_matrix(const std::string& path);

}  // namespace rfopt
