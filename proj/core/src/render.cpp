#include "causal/render.hpp"

#include <algorithm>
#include <vector>

#include "causal/syntax.hpp"

namespace causal {

namespace {

// Lines are stored top to bottom and all padded to the same width.
struct Block {
  std::vector<std::string> lines;
  std::size_t width = 0;
};

Block make_block(std::vector<std::string> lines) {
  Block b;
  for (const auto& l : lines) b.width = std::max(b.width, l.size());
  for (auto& l : lines) l.resize(b.width, ' ');
  b.lines = std::move(lines);
  return b;
}

std::string centered(const std::string& s, std::size_t width) {
  std::size_t left = (width - s.size()) / 2;
  return std::string(left, ' ') + s + std::string(width - s.size() - left, ' ');
}

Block widen(const Block& b, std::size_t width) {
  Block out;
  out.width = width;
  for (const auto& l : b.lines) out.lines.push_back(centered(l, width));
  return out;
}

Block wire(std::size_t width, std::size_t height) {
  Block out;
  out.width = width;
  out.lines.assign(height, centered("|", width));
  return out;
}

Block box(const std::string& label) {
  std::string edge = "+" + std::string(label.size() + 2, '-') + "+";
  return make_block({edge, "| " + label + " |", edge});
}

std::string short_label(const Term& t) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::Swap: return "swap";
    case K::Copy: return "copy";
    case K::Del: return "del";
    case K::Lit:
      return "lit " + std::to_string(t.matrix().size()) + "x" +
             std::to_string(t.matrix().empty() ? 0 : t.matrix()[0].size());
    case K::Const: {
      std::string v = to_string(t.value());
      if (v.size() > 24) v = v.substr(0, 21) + "...";
      return "const " + v;
    }
    case K::Apply: return "apply";
    case K::Spec: return "spec";
    default: return "?";
  }
}

Block stack(const Block& upper, const Block& lower) {
  std::size_t width = std::max(upper.width, lower.width);
  Block out = widen(upper, width);
  out.lines.push_back(centered("|", width));
  for (const auto& l : widen(lower, width).lines) out.lines.push_back(l);
  return out;
}

Block beside(const Block& left, const Block& right, const std::string& gap) {
  std::size_t height = std::max(left.lines.size(), right.lines.size());
  auto pad = [&](const Block& b) {
    Block out = wire(b.width, height - b.lines.size());
    for (const auto& l : b.lines) out.lines.push_back(l);
    return out;
  };
  Block l = pad(left), r = pad(right);
  Block out;
  out.width = left.width + gap.size() + right.width;
  for (std::size_t i = 0; i < height; ++i) {
    bool middle = i == height / 2;
    out.lines.push_back(l.lines[i] + (middle ? gap : std::string(gap.size(), ' ')) + r.lines[i]);
  }
  return out;
}

Block layout(const Term& t) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::Id: return wire(std::max<std::size_t>(t.type().arity(), 1), 1);
    case K::Seq: return stack(layout(t.second()), layout(t.first()));
    case K::Par: return beside(layout(t.first()), layout(t.second()), "  ");
    case K::Mix: {
      Block inner = beside(layout(t.first()), layout(t.second()), " or ");
      std::string title = "+- mix " + to_string(t.weight()) + " ";
      std::size_t width = std::max(inner.width + 4, title.size() + 1);
      std::vector<std::string> lines;
      lines.push_back(title + std::string(width - title.size() - 1, '-') + "+");
      for (const auto& l : widen(inner, width - 4).lines) lines.push_back("| " + l + " |");
      lines.push_back("+" + std::string(width - 2, '-') + "+");
      return make_block(std::move(lines));
    }
    default: return box(short_label(t));
  }
}

}  // namespace

std::string render(const Term& t) {
  Block body = layout(normalize(t));
  std::string top = "out: " + to_string(t.cod());
  std::string bottom = "in:  " + to_string(t.dom());
  std::size_t width = std::max({body.width, top.size(), bottom.size()});
  std::string out = top + "\n";
  out += centered("^", width) + "\n";
  for (const auto& l : widen(body, width).lines) out += l + "\n";
  out += centered("|", width) + "\n";
  out += bottom + "\n";
  std::string trimmed;
  for (std::size_t pos = 0; pos < out.size();) {
    std::size_t nl = out.find('\n', pos);
    std::string line = out.substr(pos, nl - pos);
    line.erase(line.find_last_not_of(' ') + 1);
    trimmed += line + "\n";
    pos = nl + 1;
  }
  return trimmed;
}

}  // namespace causal
