#include "insider/state.hpp"

#include <algorithm>
#include <cstdint>

namespace insider {

namespace {

class Writer {
 public:
  void number(std::uint64_t v) {
    // LEB128
    do {
      auto byte = static_cast<unsigned char>(v & 0x7f);
      v >>= 7;
      if (v != 0) byte |= 0x80;
      out_.push_back(static_cast<char>(byte));
    } while (v != 0);
  }

  void text(const std::string& s) {
    number(s.size());
    out_ += s;
  }

  template <typename T, typename F>
  void sorted_list(const std::vector<T>& items, F&& emit) {
    if (std::is_sorted(items.begin(), items.end()) &&
        std::adjacent_find(items.begin(), items.end()) == items.end()) {
      number(items.size());
      for (const auto& x : items) emit(x);
      return;
    }
    std::vector<T> copy = items;
    std::sort(copy.begin(), copy.end());
    copy.erase(std::unique(copy.begin(), copy.end()), copy.end());
    number(copy.size());
    for (const auto& x : copy) emit(x);
  }

  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

}  // namespace

State encode(const InfraGraph& g) {
  Writer w;
  w.sorted_list(g.edges, [&](const auto& e) {
    w.number(e.first);
    w.number(e.second);
  });
  w.number(g.placements.size());
  for (const auto& here : g.placements) w.sorted_list(here, [&](IdIndex i) { w.number(i); });
  w.number(g.credentials.size());
  for (const auto& c : g.credentials) w.sorted_list(c, [&](const std::string& s) { w.text(s); });
  w.number(g.roles.size());
  for (const auto& r : g.roles) w.sorted_list(r, [&](const std::string& s) { w.text(s); });
  w.number(g.values.size());
  for (const auto& v : g.values) {
    if (v) {
      w.number(1);
      w.text(*v);
    } else {
      w.number(0);
    }
  }
  return State{w.take()};
}

}  // namespace insider
