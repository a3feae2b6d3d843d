#pragma once

#include <iosfwd>
#include <string>

#include "ebw/design.hpp"
#include "ebw/gf2.hpp"

namespace ebw::io {

// design JSON: {"blocks": [[...], ...], "v": n}; written canonically
// (blocks sorted, two-space indent)
designs::Design read_design_json(std::istream& in);
designs::Design read_design_json_file(const std::string& path);
void write_design_json(std::ostream& out, const designs::Design& d);
void write_design_json_file(const std::string& path, const designs::Design& d);

// standard alist text: "n_cols n_rows", max column/row degrees, per-column
// and per-row degree lists, then 1-based index lists padded with zeros
gf2::BinaryMatrix read_alist(std::istream& in);
gf2::BinaryMatrix read_alist_file(const std::string& path);
void write_alist(std::ostream& out, const gf2::BinaryMatrix& h);
void write_alist_file(const std::string& path, const gf2::BinaryMatrix& h);

enum class InputFormat { design_json, alist };
// .json / .alist extension, else sniff the leading byte for '{'
InputFormat detect_format(const std::string& path);

// fnv1a-64 over the raw file bytes, rendered as "fnv1a:<16 hex digits>"
std::string fingerprint_file(const std::string& path);
std::string fingerprint_bytes(const std::string& bytes);

} // namespace ebw::io
