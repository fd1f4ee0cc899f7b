#include "su/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace su {

namespace {

struct Document {
  std::string name;
  Frame frame;
  std::map<std::string, PointSet> valuation;
  bool closure_upset = false;
};

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg, line);
}

Document read_document(std::istream& in) {
  std::string name;
  int points = -1;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<std::string, std::vector<int>>> vals;
  bool closure = false, closure_upset = false, ended = false;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word[0] == '#') continue;
    if (ended) fail(lineno, "content after 'end'");
    if (word == "frame") {
      if (!name.empty()) fail(lineno, "duplicate 'frame' line");
      if (!(ls >> name)) fail(lineno, "'frame' needs a name");
    } else if (word == "points") {
      if (name.empty()) fail(lineno, "'points' before 'frame'");
      if (points >= 0) fail(lineno, "duplicate 'points' line");
      if (!(ls >> points) || points < 1)
        fail(lineno, "'points' needs a positive count");
    } else if (word == "edge") {
      if (points < 0) fail(lineno, "'edge' before 'points'");
      int i, j;
      if (!(ls >> i >> j)) fail(lineno, "'edge' needs two point indices");
      if (i < 0 || i >= points || j < 0 || j >= points)
        fail(lineno, "edge endpoint out of range");
      edges.emplace_back(i, j);
    } else if (word == "closure") {
      closure = true;
    } else if (word == "closure-upset") {
      closure_upset = true;
    } else if (word == "val") {
      if (points < 0) fail(lineno, "'val' before 'points'");
      std::string var;
      if (!(ls >> var)) fail(lineno, "'val' needs a variable name");
      std::vector<int> members;
      int p;
      while (ls >> p) {
        if (p < 0 || p >= points) fail(lineno, "valuation point out of range");
        members.push_back(p);
      }
      vals.emplace_back(var, members);
    } else if (word == "end") {
      ended = true;
    } else {
      fail(lineno, "unknown directive '" + word + "'");
    }
  }
  if (name.empty()) fail(lineno, "missing 'frame' line");
  if (points < 0) fail(lineno, "missing 'points' line");
  if (!ended) fail(lineno, "missing 'end' line");

  Frame frame(points, edges);
  if (closure) frame = frame.reflexive_transitive_closure();

  Document doc{name, frame, {}, closure_upset};
  for (auto& [var, members] : vals) {
    PointSet s(points);
    for (int p : members) s.set(p);
    auto it = doc.valuation.find(var);
    if (it == doc.valuation.end())
      doc.valuation.emplace(var, std::move(s));
    else
      it->second |= s;
  }
  return doc;
}

}  // namespace

FrameFile read_frame_file(std::istream& in) {
  Document doc = read_document(in);
  return FrameFile{std::move(doc.name), std::move(doc.frame)};
}

FrameFile read_frame_file_from(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open frame file '" + path + "'");
  return read_frame_file(in);
}

ModelFile read_model_file(std::istream& in) {
  Document doc = read_document(in);
  if (!doc.frame.is_s4())
    throw ParseError(
        "model frame is not S4 (reflexive and transitive); add 'closure'", 0);
  for (auto& [var, val] : doc.valuation) {
    if (doc.frame.is_upset(val)) continue;
    if (doc.closure_upset)
      val = doc.frame.r_image(val);
    else
      throw ParseError("valuation of '" + var +
                           "' is not an upset; add 'closure-upset' to close "
                           "it upward",
                       0);
  }
  return ModelFile{std::move(doc.name),
                   Model(std::move(doc.frame), std::move(doc.valuation))};
}

ModelFile read_model_file_from(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open model file '" + path + "'");
  return read_model_file(in);
}

namespace {

void write_header(std::ostringstream& out, const std::string& name,
                  const Frame& frame,
                  const std::vector<std::string>& comments) {
  out << "frame " << name << "\n";
  for (const std::string& c : comments) out << c << "\n";
  out << "points " << frame.size() << "\n";
  for (auto [i, j] : frame.edges()) out << "edge " << i << " " << j << "\n";
}

}  // namespace

std::string write_frame_file(const std::string& name, const Frame& frame,
                             const std::vector<std::string>& comments) {
  std::ostringstream out;
  write_header(out, name, frame, comments);
  out << "end\n";
  return out.str();
}

std::string write_model_file(const std::string& name, const Model& model,
                             const std::vector<std::string>& comments) {
  std::ostringstream out;
  write_header(out, name, model.frame(), comments);
  for (const auto& [var, val] : model.valuation()) {
    out << "val " << var;
    for (int p : set_members(val)) out << " " << p;
    out << "\n";
  }
  out << "end\n";
  return out.str();
}

}  // namespace su
