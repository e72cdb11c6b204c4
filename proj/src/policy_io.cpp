#include <sstream>

#include "fondplus/frontend.hpp"
#include "text.hpp"

namespace fondplus {

Policy parse_policy(const FondModel& model, std::string_view text) {
  Policy policy(model.num_states());
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = text::trim(line);
    if (line.empty() || line.starts_with("format:")) continue;

    const auto toks = text::list_tokens(line, number, false);
    if (toks.size() != 2) throw ParseError(number, "policy lines have the form '<state> <action>'");
    const auto s = model.find_state(toks[0]);
    if (!s) throw ParseError(number, "unknown state '" + toks[0] + "'");
    const auto a = model.find_action(toks[1]);
    if (!a) throw ParseError(number, "unknown action '" + toks[1] + "'");
    if (model.is_goal(*s)) throw ParseError(number, "goal state '" + toks[0] + "' cannot be assigned an action");
    if (policy[*s]) throw ParseError(number, "state '" + toks[0] + "' assigned twice");
    policy.assign(*s, *a);
  }
  return policy;
}

std::string serialize_policy(const FondModel& model, const Policy& policy) {
  std::ostringstream os;
  for (std::uint32_t i = 0; i < model.num_states(); ++i) {
    const StateId s(i);
    if (const auto a = policy[s]) os << model.label(s) << ' ' << model.action_name(*a) << '\n';
  }
  return os.str();
}

}  // namespace fondplus
