#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "insider/format.hpp"
#include "lexer.hpp"

namespace insider {

std::string format_number(double x) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc()) return "nan";
  return std::string(buf.data(), end);
}

std::vector<door::DoorEvent> parse_door_script(std::string_view text) {
  using door::DoorEvent;
  std::vector<DoorEvent> out;
  std::vector<Diagnostic> diagnostics;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    try {
      detail::TokenStream ts(detail::tokenize(raw, line_no));
      if (ts.at_end()) continue;
      const detail::Token t = ts.expect_word("event");
      if (t.text == "lock") {
        out.push_back(DoorEvent::lock());
      } else if (t.text == "unlock") {
        out.push_back(DoorEvent::unlock());
      } else if (t.text == "pin_ok") {
        out.push_back(DoorEvent::pin_correct());
      } else if (t.text == "pin_bad") {
        out.push_back(DoorEvent::pin_incorrect());
      } else if (t.text == "wait") {
        const detail::Token n = ts.next();
        double dt = 0.0;
        bool ok = n.kind == detail::Tok::number || n.kind == detail::Tok::real;
        if (ok) {
          const char* first = n.text.data();
          auto [ptr, ec] = std::from_chars(first, first + n.text.size(), dt);
          ok = ec == std::errc() && ptr == first + n.text.size() && std::isfinite(dt) && dt > 0.0;
        }
        if (!ok) ts.fail(n, "wait needs a positive number of seconds");
        out.push_back(DoorEvent::wait(dt));
      } else {
        ts.fail(t, "unknown door event '" + t.text + "'");
      }
      ts.expect_end();
    } catch (const ParseError& e) {
      for (const auto& d : e.diagnostics()) diagnostics.push_back(d);
    }
  }
  if (!diagnostics.empty()) throw ParseError(std::move(diagnostics));
  return out;
}

std::string format_door_trace(const std::vector<door::TraceRow>& rows) {
  std::ostringstream os;
  os << "step\tevent\tmode\tclock\tpin_timer\topen\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    os << i + 1 << '\t' << door::describe(r.event) << '\t' << door::to_string(r.state.mode) << '\t'
       << format_number(r.state.clock) << '\t'
       << (r.state.pin_timer ? format_number(*r.state.pin_timer) : std::string("-")) << '\t'
       << (r.open ? "yes" : "no") << '\n';
  }
  return os.str();
}

}  // namespace insider
