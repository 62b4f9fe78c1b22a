#include "insider/state_set.hpp"

#include <bit>
#include <cassert>

namespace insider {

StateSet::StateSet(std::size_t universe, bool full)
    : universe_(universe), words_((universe + 63) / 64, full ? ~std::uint64_t{0} : 0) {
  trim();
}

StateSet StateSet::of(std::size_t universe, std::initializer_list<std::size_t> members) {
  StateSet s(universe);
  for (std::size_t i : members) s.insert(i);
  return s;
}

std::size_t StateSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

StateSet& StateSet::operator|=(const StateSet& o) {
  assert(universe_ == o.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

StateSet& StateSet::operator&=(const StateSet& o) {
  assert(universe_ == o.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

StateSet StateSet::complement() const {
  StateSet out = *this;
  for (auto& w : out.words_) w = ~w;
  out.trim();
  return out;
}

bool StateSet::subset_of(const StateSet& o) const {
  assert(universe_ == o.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~o.words_[i]) != 0) return false;
  return true;
}

std::vector<std::size_t> StateSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto bits = words_[w];
    while (bits != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

void StateSet::trim() {
  if (universe_ % 64 != 0 && !words_.empty())
    words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
}

}  // namespace insider
