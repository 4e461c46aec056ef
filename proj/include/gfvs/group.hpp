#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gfvs {

/// Raised when a caller breaks an operation's contract (bad ids, foreign
/// elements, malformed text). The CLI maps it to exit status 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Group;

/// An element of some group. The payload only has meaning to the group
/// that produced it; all arithmetic goes through that group.
class Element {
 public:
  Element() = default;

  const Group* owner() const noexcept { return owner_; }
  std::span<const std::int32_t> payload() const noexcept { return payload_; }

 private:
  friend class Group;
  Element(const Group* owner, std::vector<std::int32_t> payload)
      : owner_(owner), payload_(std::move(payload)) {}

  const Group* owner_ = nullptr;
  std::vector<std::int32_t> payload_;
};

/// Oracle access to a group: identity, product, inverse and equality, plus
/// a deterministic text encoding. Implementations are immutable and may be
/// shared between threads.
class Group {
 public:
  virtual ~Group() = default;

  virtual Element identity() const = 0;
  virtual Element mul(const Element& a, const Element& b) const = 0;
  virtual Element inv(const Element& a) const = 0;

  /// All shipped groups keep payloads canonical, so equality of elements is
  /// equality of payloads.
  bool eq(const Element& a, const Element& b) const;
  bool is_identity(const Element& a) const { return eq(a, identity()); }

  /// Header form used in instance files, e.g. "cyclic 3".
  virtual std::string descriptor() const = 0;
  virtual std::string format(const Element& a) const = 0;
  virtual Element parse(std::string_view text) const = 0;

  /// Uniform-ish sample used by generators; free groups return one letter.
  virtual Element random_element(std::mt19937_64& rng) const = 0;

 protected:
  Element make(std::vector<std::int32_t> payload) const {
    return Element(this, std::move(payload));
  }
  /// Throws UsageError unless `a` was produced by this group.
  void check_owner(const Element& a) const;
};

/// Z_n under addition.
class CyclicGroup final : public Group {
 public:
  explicit CyclicGroup(int order);

  int order() const noexcept { return order_; }
  Element element(int residue) const;
  int residue(const Element& a) const;

  Element identity() const override;
  Element mul(const Element& a, const Element& b) const override;
  Element inv(const Element& a) const override;
  std::string descriptor() const override;
  std::string format(const Element& a) const override;
  Element parse(std::string_view text) const override;
  Element random_element(std::mt19937_64& rng) const override;

 private:
  int order_;
};

/// Z_2^m, elements are bit vectors added coordinatewise.
class BitVectorGroup final : public Group {
 public:
  explicit BitVectorGroup(int dimension);

  int dimension() const noexcept { return dimension_; }
  Element basis(int index) const;
  Element element(std::span<const int> bits) const;

  Element identity() const override;
  Element mul(const Element& a, const Element& b) const override;
  Element inv(const Element& a) const override;
  std::string descriptor() const override;
  std::string format(const Element& a) const override;
  Element parse(std::string_view text) const override;
  Element random_element(std::mt19937_64& rng) const override;

 private:
  int dimension_;
};

/// S_n. A permutation p is stored as its image list; mul(p, q) applies p
/// first, then q, matching left-to-right path products.
class SymmetricGroup final : public Group {
 public:
  explicit SymmetricGroup(int degree);

  int degree() const noexcept { return degree_; }
  Element element(std::span<const int> images) const;

  Element identity() const override;
  Element mul(const Element& a, const Element& b) const override;
  Element inv(const Element& a) const override;
  std::string descriptor() const override;
  std::string format(const Element& a) const override;
  Element parse(std::string_view text) const override;
  Element random_element(std::mt19937_64& rng) const override;

 private:
  int degree_;
};

/// A letter of a free-group word: generator id and whether it is inverted.
struct Letter {
  int generator = 0;
  bool inverted = false;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Free group on `rank` generators. Elements are freely reduced words, so
/// payload equality solves the word problem.
class FreeGroup final : public Group {
 public:
  explicit FreeGroup(int rank);

  int rank() const noexcept { return rank_; }

  /// Cancels adjacent inverse pairs until none remain.
  Element free_reduce(std::span<const Letter> word) const;
  Element generator(int id) const;
  std::vector<Letter> letters(const Element& a) const;
  std::size_t length(const Element& a) const { return a.payload().size(); }

  /// Longest word this group has produced since the last reset.
  std::size_t longest_word() const noexcept { return longest_.load(); }
  void reset_longest_word() const noexcept { longest_.store(0); }

  Element identity() const override;
  Element mul(const Element& a, const Element& b) const override;
  Element inv(const Element& a) const override;
  std::string descriptor() const override;
  std::string format(const Element& a) const override;
  Element parse(std::string_view text) const override;
  Element random_element(std::mt19937_64& rng) const override;

 private:
  Element make_word(std::vector<std::int32_t> reduced) const;

  int rank_;
  mutable std::atomic<std::size_t> longest_{0};
};

/// Builds a group from its kind and integer parameters
/// ("cyclic" n, "z2pow" m, "symmetric" n, "free" rank).
std::shared_ptr<const Group> make_group(std::string_view kind,
                                        std::span<const int> params);

/// Parses a header descriptor such as "symmetric 3".
std::shared_ptr<const Group> parse_group(std::string_view descriptor);

}  // namespace gfvs
