#include "gfvs/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

namespace gfvs {
namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw UsageError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int32_t encode_letter(const Letter& l) {
  return l.inverted ? -(l.generator + 1) : (l.generator + 1);
}

// Appends `token` to a reduced word, cancelling against its last letter.
void push_reduced(std::vector<std::int32_t>& word, std::int32_t token) {
  if (!word.empty() && word.back() == -token) {
    word.pop_back();
  } else {
    word.push_back(token);
  }
}

}  // namespace

bool Group::eq(const Element& a, const Element& b) const {
  check_owner(a);
  check_owner(b);
  return std::ranges::equal(a.payload(), b.payload());
}

void Group::check_owner(const Element& a) const {
  if (a.owner() != this) {
    throw UsageError("element does not belong to group " + descriptor());
  }
}

// ---------------------------------------------------------------- cyclic

CyclicGroup::CyclicGroup(int order) : order_(order) {
  if (order < 1) throw UsageError("cyclic group order must be positive");
}

Element CyclicGroup::element(int residue) const {
  int r = residue % order_;
  if (r < 0) r += order_;
  return make({r});
}

int CyclicGroup::residue(const Element& a) const {
  check_owner(a);
  return a.payload()[0];
}

Element CyclicGroup::identity() const { return make({0}); }

Element CyclicGroup::mul(const Element& a, const Element& b) const {
  return element(residue(a) + residue(b));
}

Element CyclicGroup::inv(const Element& a) const { return element(-residue(a)); }

std::string CyclicGroup::descriptor() const {
  return "cyclic " + std::to_string(order_);
}

std::string CyclicGroup::format(const Element& a) const {
  return std::to_string(residue(a));
}

Element CyclicGroup::parse(std::string_view text) const {
  int r = parse_int(text, "residue");
  if (r < 0 || r >= order_) {
    throw UsageError("residue " + std::string(text) + " out of range for " + descriptor());
  }
  return make({r});
}

Element CyclicGroup::random_element(std::mt19937_64& rng) const {
  return make({std::uniform_int_distribution<int>(0, order_ - 1)(rng)});
}

// ------------------------------------------------------------ bit vector

BitVectorGroup::BitVectorGroup(int dimension) : dimension_(dimension) {
  if (dimension < 1) throw UsageError("z2pow dimension must be positive");
}

Element BitVectorGroup::basis(int index) const {
  if (index < 0 || index >= dimension_) throw UsageError("basis index out of range");
  std::vector<std::int32_t> bits(dimension_, 0);
  bits[index] = 1;
  return make(std::move(bits));
}

Element BitVectorGroup::element(std::span<const int> bits) const {
  if (static_cast<int>(bits.size()) != dimension_) throw UsageError("wrong bit vector length");
  std::vector<std::int32_t> payload;
  payload.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) throw UsageError("bit vector entries must be 0 or 1");
    payload.push_back(b);
  }
  return make(std::move(payload));
}

Element BitVectorGroup::identity() const {
  return make(std::vector<std::int32_t>(dimension_, 0));
}

Element BitVectorGroup::mul(const Element& a, const Element& b) const {
  check_owner(a);
  check_owner(b);
  std::vector<std::int32_t> out(dimension_);
  for (int i = 0; i < dimension_; ++i) out[i] = a.payload()[i] ^ b.payload()[i];
  return make(std::move(out));
}

Element BitVectorGroup::inv(const Element& a) const {
  check_owner(a);
  return a;
}

std::string BitVectorGroup::descriptor() const {
  return "z2pow " + std::to_string(dimension_);
}

std::string BitVectorGroup::format(const Element& a) const {
  check_owner(a);
  std::string out;
  for (auto bit : a.payload()) out.push_back(bit ? '1' : '0');
  return out;
}

Element BitVectorGroup::parse(std::string_view text) const {
  if (static_cast<int>(text.size()) != dimension_) {
    throw UsageError("bit string '" + std::string(text) + "' must have length " +
                     std::to_string(dimension_));
  }
  std::vector<std::int32_t> bits;
  for (char c : text) {
    if (c != '0' && c != '1') throw UsageError("bad bit string '" + std::string(text) + "'");
    bits.push_back(c - '0');
  }
  return make(std::move(bits));
}

Element BitVectorGroup::random_element(std::mt19937_64& rng) const {
  std::vector<std::int32_t> bits(dimension_);
  for (auto& b : bits) b = static_cast<std::int32_t>(rng() & 1u);
  return make(std::move(bits));
}

// ------------------------------------------------------------- symmetric

SymmetricGroup::SymmetricGroup(int degree) : degree_(degree) {
  if (degree < 1) throw UsageError("symmetric group degree must be positive");
}

Element SymmetricGroup::element(std::span<const int> images) const {
  if (static_cast<int>(images.size()) != degree_) {
    throw UsageError("permutation must list " + std::to_string(degree_) + " images");
  }
  std::vector<char> seen(degree_, 0);
  std::vector<std::int32_t> payload;
  for (int x : images) {
    if (x < 0 || x >= degree_ || seen[x]) throw UsageError("not a permutation");
    seen[x] = 1;
    payload.push_back(x);
  }
  return make(std::move(payload));
}

Element SymmetricGroup::identity() const {
  std::vector<std::int32_t> p(degree_);
  for (int i = 0; i < degree_; ++i) p[i] = i;
  return make(std::move(p));
}

Element SymmetricGroup::mul(const Element& a, const Element& b) const {
  check_owner(a);
  check_owner(b);
  std::vector<std::int32_t> out(degree_);
  for (int i = 0; i < degree_; ++i) out[i] = b.payload()[a.payload()[i]];
  return make(std::move(out));
}

Element SymmetricGroup::inv(const Element& a) const {
  check_owner(a);
  std::vector<std::int32_t> out(degree_);
  for (int i = 0; i < degree_; ++i) out[a.payload()[i]] = i;
  return make(std::move(out));
}

std::string SymmetricGroup::descriptor() const {
  return "symmetric " + std::to_string(degree_);
}

std::string SymmetricGroup::format(const Element& a) const {
  check_owner(a);
  std::string out;
  for (std::size_t i = 0; i < a.payload().size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(a.payload()[i]);
  }
  return out;
}

Element SymmetricGroup::parse(std::string_view text) const {
  std::vector<int> images;
  for (auto tok : split_ws(text)) images.push_back(parse_int(tok, "permutation image"));
  return element(images);
}

Element SymmetricGroup::random_element(std::mt19937_64& rng) const {
  std::vector<std::int32_t> p(degree_);
  for (int i = 0; i < degree_; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return make(std::move(p));
}

// ------------------------------------------------------------------ free

FreeGroup::FreeGroup(int rank) : rank_(rank) {
  if (rank < 1) throw UsageError("free group rank must be positive");
}

Element FreeGroup::make_word(std::vector<std::int32_t> reduced) const {
  std::size_t seen = longest_.load(std::memory_order_relaxed);
  while (reduced.size() > seen &&
         !longest_.compare_exchange_weak(seen, reduced.size(), std::memory_order_relaxed)) {
  }
  return make(std::move(reduced));
}

Element FreeGroup::free_reduce(std::span<const Letter> word) const {
  std::vector<std::int32_t> out;
  out.reserve(word.size());
  for (const auto& l : word) {
    if (l.generator < 0 || l.generator >= rank_) {
      throw UsageError("unknown generator g" + std::to_string(l.generator));
    }
    push_reduced(out, encode_letter(l));
  }
  return make_word(std::move(out));
}

Element FreeGroup::generator(int id) const {
  Letter l{id, false};
  return free_reduce(std::span<const Letter>(&l, 1));
}

std::vector<Letter> FreeGroup::letters(const Element& a) const {
  check_owner(a);
  std::vector<Letter> out;
  for (auto t : a.payload()) out.push_back({std::abs(t) - 1, t < 0});
  return out;
}

Element FreeGroup::identity() const { return make({}); }

Element FreeGroup::mul(const Element& a, const Element& b) const {
  check_owner(a);
  check_owner(b);
  std::vector<std::int32_t> out(a.payload().begin(), a.payload().end());
  for (auto t : b.payload()) push_reduced(out, t);
  return make_word(std::move(out));
}

Element FreeGroup::inv(const Element& a) const {
  check_owner(a);
  std::vector<std::int32_t> out(a.payload().rbegin(), a.payload().rend());
  for (auto& t : out) t = -t;
  return make_word(std::move(out));
}

std::string FreeGroup::descriptor() const { return "free " + std::to_string(rank_); }

std::string FreeGroup::format(const Element& a) const {
  check_owner(a);
  if (a.payload().empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < a.payload().size(); ++i) {
    auto t = a.payload()[i];
    if (i) out.push_back(' ');
    out += "g" + std::to_string(std::abs(t) - 1);
    if (t < 0) out.push_back('^');
  }
  return out;
}

Element FreeGroup::parse(std::string_view text) const {
  auto tokens = split_ws(text);
  if (tokens.size() == 1 && tokens[0] == "e") return identity();
  if (tokens.empty()) throw UsageError("empty free group word (write 'e' for the identity)");
  std::vector<Letter> word;
  for (auto tok : tokens) {
    bool inverted = !tok.empty() && tok.back() == '^';
    if (inverted) tok.remove_suffix(1);
    if (tok.size() < 2 || tok[0] != 'g') {
      throw UsageError("bad free group token '" + std::string(tok) + "'");
    }
    word.push_back({parse_int(tok.substr(1), "generator id"), inverted});
  }
  return free_reduce(word);
}

Element FreeGroup::random_element(std::mt19937_64& rng) const {
  Letter l{std::uniform_int_distribution<int>(0, rank_ - 1)(rng), (rng() & 1u) != 0};
  return free_reduce(std::span<const Letter>(&l, 1));
}

// --------------------------------------------------------------- factory

std::shared_ptr<const Group> make_group(std::string_view kind, std::span<const int> params) {
  auto need_one = [&] {
    if (params.size() != 1) {
      throw UsageError("group kind '" + std::string(kind) + "' takes exactly one parameter");
    }
    return params[0];
  };
  if (kind == "cyclic") return std::make_shared<CyclicGroup>(need_one());
  if (kind == "z2pow") return std::make_shared<BitVectorGroup>(need_one());
  if (kind == "symmetric") return std::make_shared<SymmetricGroup>(need_one());
  if (kind == "free") return std::make_shared<FreeGroup>(need_one());
  throw UsageError("unknown group kind '" + std::string(kind) + "'");
}

std::shared_ptr<const Group> parse_group(std::string_view descriptor) {
  auto tokens = split_ws(descriptor);
  if (tokens.empty()) throw UsageError("missing group kind");
  std::vector<int> params;
  for (std::size_t i = 1; i < tokens.size(); ++i) params.push_back(parse_int(tokens[i], "group parameter"));
  return make_group(tokens[0], params);
}

}  // namespace gfvs
