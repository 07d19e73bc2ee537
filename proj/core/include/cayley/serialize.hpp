#pragma once

#include <string>

#include "cayley/frames.hpp"
#include "cayley/group.hpp"
#include "cayley/gsp.hpp"
#include "cayley/irreps.hpp"
#include "cayley/spectral.hpp"

namespace cayley {

// All functions take/produce JSON text; schema problems raise ValidationError,
// file problems raise IoError.  Complex scalars are [re, im] pairs (a bare
// number is accepted on input as a real).

// {"kind":"cyclic","n":6} | {"kind":"symmetric","n":4}
// | {"kind":"table","table":[[...]],"names":[...]}   (names optional)
FiniteGroup group_from_config(const std::string& json_text);

// {"kind":"generating_set","elements":["(12)",...]}
// | {"kind":"map","values":{"(12)":1.5,...}}         (unlisted elements get 0)
WeightFunction weight_from_config(const FiniteGroup& g, const std::string& json_text);

// [{"name":"pi","dim":2,"matrices":[[[..],..],..]}, ...] or {"irreps":[...]};
// matrices in group element order, row-major.
IrrepSet irreps_from_json(const std::string& json_text);
std::string irreps_to_json(const IrrepSet& set, bool pretty = false);

// {"eigenvalues":[...], "labels":[{"rep":"pi","i":1,"lambda":1.0},...],
//  "vectors":[[[re,im],...],...]}   (one entry per basis vector)
std::string eigenbasis_to_json(const PreferredEigenbasis& basis, bool pretty = false);
// one row per vector: lambda,rep,i,components...; rejects non-real bases
std::string eigenbasis_to_csv(const PreferredEigenbasis& basis);

// {"specs":[{"rep":"pi","i":1,"lambda":-2.0,"generator":"mercedes"},...]};
// generator is "orthonormal" | "mercedes" | {"kind":"harmonic","m":4}
// | {"kind":"explicit","vectors":[[..],..]}
std::vector<SubspaceFrameSpec> frame_specs_from_json(const std::string& json_text);

std::string frame_to_json(const Frame& f, const FrameBounds& bounds, bool tight,
                          bool pretty = false);

// {"values":[...]} or a bare array; entries are numbers or [re,im]
GraphSignal signal_from_json(const std::string& json_text);
// one value per line: "re" or "re,im"
GraphSignal signal_from_csv(const std::string& csv_text);

// 64-bit FNV-1a of the canonicalized (sorted-key, compact) document, as hex
std::string fingerprint_json(const std::string& json_text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}
