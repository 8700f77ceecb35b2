/*
   Copyright 2026 The cyclicbent Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// JSON and CSV renderings of library objects. Formats are described in docs/formats.md.

#ifndef CYCLICBENT_SERIALIZE_HPP
#define CYCLICBENT_SERIALIZE_HPP

#include "cyclicbent/boolfun.hpp"
#include "cyclicbent/codebook.hpp"
#include "cyclicbent/codes.hpp"
#include "cyclicbent/construct.hpp"
#include "cyclicbent/exact.hpp"
#include "cyclicbent/linpoly.hpp"
#include "cyclicbent/seqfam.hpp"

#include "json.hpp"

#include <span>
#include <string>

namespace cyclicbent::io {

using nlohmann::json;

/// Byte j holds entries 8j..8j+7, least significant bit first; lowercase hex.
std::string hex_pack(std::span<const std::uint8_t> bits);
std::vector<std::uint8_t> hex_unpack(const std::string& hex, std::size_t n_bits);
/// %.12g
std::string format_double(double x);

json to_json(const Rational& r);
json to_json(const BoolFun& f);
BoolFun boolfun_from_json(const json& j);
json to_json(const WalshSpectrum& w);
json to_json(const ChainSpec& s);
ChainSpec chain_from_json(const json& j);
json to_json(const CyclicCertificate& c);
json to_json(const CorrDist& d);
json to_json(const DistributionReport& r);
json to_json(const DesignResult& d);
json to_json(const NonlinearCode& c);
json to_json(const linpoly::LinPoly& L);
json to_json(const linpoly::QuadraticReport& r);
json to_json(const MubReport& r);

/// One row per codeword: row index, basis label, then re/im pairs of the normalized entries.
std::string codebook_csv(const Codebook& cb);
/// One row per sequence: lambda (or inf), nu, then symbols 1, i, -1, -i.
std::string sequences_csv(const SequenceFamily& fam);

}  // namespace cyclicbent::io

#endif
