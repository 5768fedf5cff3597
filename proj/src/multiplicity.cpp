#include "cusps/multiplicity.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace cusps {

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw std::invalid_argument("invalid multiplicity sequence: " + what);
}

}  // namespace

MultiplicitySequence MultiplicitySequence::validate_full(std::vector<long long> m) {
  const size_t t = m.size();
  if (t == 0) invalid("empty");
  for (size_t i = 0; i < t; ++i)
    if (m[i] < 1) invalid("entry " + std::to_string(m[i]) + " at index " + std::to_string(i));
  for (size_t i = 0; i + 1 < t; ++i)
    if (m[i + 1] > m[i]) invalid("entries increase at index " + std::to_string(i + 1));
  if (m.back() != 1) invalid("last entry must be 1");
  if (m[0] < 2) invalid("first entry must be at least 2");

  // Greedy proximity closure: the block after p_i must sum to exactly m_i.
  std::vector<long long> plen(t, 0);
  for (size_t i = 0; i + 1 < t; ++i) {
    long long got = 0;
    size_t j = i + 1;
    while (j < t && got < m[i]) got += m[j++];
    if (got > m[i]) invalid("proximity block after index " + std::to_string(i) + " overshoots");
    if (got < m[i]) invalid("proximity block after index " + std::to_string(i) + " is incomplete");
    plen[i] = static_cast<long long>(j - (i + 1));
  }

  // No point sits in more than two blocks.
  std::vector<int> count(t, 0);
  for (size_t i = 0; i + 1 < t; ++i)
    for (long long j = 1; j <= plen[i]; ++j) ++count[i + static_cast<size_t>(j)];
  for (size_t j = 0; j < t; ++j)
    if (count[j] > 2)
      invalid("point " + std::to_string(j) + " is proximate to " + std::to_string(count[j]) +
              " points");

  size_t q = 0;
  while (m[q] != 1) ++q;  // exists: m.back() == 1
  if (static_cast<long long>(t - q) != m[q - 1])
    invalid("trailing ones: have " + std::to_string(t - q) + ", proximity forces " +
            std::to_string(m[q - 1]));

  MultiplicitySequence s;
  s.entries_ = std::move(m);
  s.prox_len_ = std::move(plen);
  s.q_ = static_cast<long long>(q);
  return s;
}

MultiplicitySequence MultiplicitySequence::from_compact(const std::vector<long long>& body) {
  if (body.empty()) invalid("compact form is empty");
  for (long long v : body)
    if (v < 2) invalid("compact form lists entries >= 2, got " + std::to_string(v));
  std::vector<long long> full = body;
  full.insert(full.end(), static_cast<size_t>(body.back()), 1);
  return validate_full(std::move(full));
}

std::vector<long long> MultiplicitySequence::compact() const {
  std::vector<long long> body;
  for (long long v : entries_)
    if (v >= 2) body.push_back(v);
  return body;
}

std::string MultiplicitySequence::notation() const {
  const std::vector<long long> body = compact();
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < body.size();) {
    size_t j = i;
    while (j < body.size() && body[j] == body[i]) ++j;
    if (i) os << ',';
    os << body[i];
    if (j - i > 1) os << '_' << (j - i);
    i = j;
  }
  os << ']';
  return os.str();
}

namespace {

long long parse_ll(const char* first, const char* last, const std::string& text) {
  long long v = 0;
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || p != last)
    throw std::invalid_argument("bad sequence notation: " + text);
  return v;
}

}  // namespace

MultiplicitySequence MultiplicitySequence::parse(const std::string& text) {
  if (text.size() < 3 || text.front() != '[' || text.back() != ']')
    throw std::invalid_argument("bad sequence notation: " + text);
  std::vector<long long> body;
  const std::string inner = text.substr(1, text.size() - 2);
  size_t pos = 0;
  while (pos <= inner.size()) {
    size_t comma = inner.find(',', pos);
    if (comma == std::string::npos) comma = inner.size();
    const std::string tok = inner.substr(pos, comma - pos);
    if (tok.empty()) throw std::invalid_argument("bad sequence notation: " + text);
    const size_t us = tok.find('_');
    long long value, rep = 1;
    if (us == std::string::npos) {
      value = parse_ll(tok.data(), tok.data() + tok.size(), text);
    } else {
      value = parse_ll(tok.data(), tok.data() + us, text);
      rep = parse_ll(tok.data() + us + 1, tok.data() + tok.size(), text);
      if (rep < 2) throw std::invalid_argument("bad sequence notation: " + text);
    }
    for (long long r = 0; r < rep; ++r) body.push_back(value);
    pos = comma + 1;
    if (comma == inner.size()) break;
  }
  return from_compact(body);
}

Int delta_invariant(const MultiplicitySequence& s) {
  Int d = 0;
  for (long long m : s.entries()) d += make_int(m) * (make_int(m) - 1) / 2;
  return d;
}

bool canonical_before(const MultiplicitySequence& x, const MultiplicitySequence& y) {
  return std::lexicographical_compare(y.entries().begin(), y.entries().end(),
                                      x.entries().begin(), x.entries().end());
}

CuspidalConfig::CuspidalConfig(CurveType t, std::vector<MultiplicitySequence> c)
    : type(std::move(t)), cusps(std::move(c)) {
  for (const auto& s : cusps)
    if (make_int(s.entries().front()) > type.b)
      throw std::invalid_argument("cusp multiplicity " + std::to_string(s.entries().front()) +
                                  " exceeds b=" + type.b.get_str());
  std::sort(cusps.begin(), cusps.end(), canonical_before);
}

std::string CuspidalConfig::cusp_notation() const {
  std::string out;
  for (size_t i = 0; i < cusps.size(); ++i) {
    if (i) out += ',';
    out += cusps[i].notation();
  }
  return out;
}

std::string CuspidalConfig::key() const {
  return std::to_string(type.e) + "," + type.a.get_str() + "," + type.b.get_str() + "|" +
         cusp_notation();
}

CuspidalConfig CuspidalConfig::parse_key(const std::string& key) {
  const size_t bar = key.find('|');
  if (bar == std::string::npos) throw std::invalid_argument("bad config key: " + key);
  const std::string head = key.substr(0, bar);
  const size_t c1 = head.find(',');
  const size_t c2 = c1 == std::string::npos ? std::string::npos : head.find(',', c1 + 1);
  if (c2 == std::string::npos) throw std::invalid_argument("bad config key: " + key);
  int e;
  {
    const std::string tok = head.substr(0, c1);
    long long v = parse_ll(tok.data(), tok.data() + tok.size(), key);
    e = static_cast<int>(v);
  }
  Int a(head.substr(c1 + 1, c2 - c1 - 1)), b(head.substr(c2 + 1));

  std::vector<MultiplicitySequence> cusps;
  const std::string tail = key.substr(bar + 1);
  size_t pos = 0;
  while (pos < tail.size()) {
    if (tail[pos] != '[') throw std::invalid_argument("bad config key: " + key);
    const size_t close = tail.find(']', pos);
    if (close == std::string::npos) throw std::invalid_argument("bad config key: " + key);
    cusps.push_back(MultiplicitySequence::parse(tail.substr(pos, close - pos + 1)));
    pos = close + 1;
    if (pos < tail.size()) {
      if (tail[pos] != ',') throw std::invalid_argument("bad config key: " + key);
      ++pos;
    }
  }
  return CuspidalConfig(CurveType(SurfaceParam(e), a, b), std::move(cusps));
}

Int total_delta(const CuspidalConfig& cfg) {
  Int d = 0;
  for (const auto& s : cfg.cusps) d += delta_invariant(s);
  return d;
}

Int genus_of_config(const CuspidalConfig& cfg) {
  return arithmetic_genus(cfg.type) - total_delta(cfg);
}

}  // namespace cusps
