// Line-based text formats for frames and models.
//
//   # comment
//   frame NAME
//   points N
//   edge I J            zero or more
//   closure             optional: apply reflexive-transitive closure on load
//   val VAR I J ...     model files only, zero or more
//   closure-upset       optional: close valuations upward instead of
//                       rejecting non-upsets
//   end
//
// A frame file is a model file without val lines; the frame reader ignores
// any valuation.

#ifndef SU_IO_HPP
#define SU_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "su/frame.hpp"
#include "su/semantics.hpp"

namespace su {

struct FrameFile {
  std::string name;
  Frame frame;
};

struct ModelFile {
  std::string name;
  Model model;
};

FrameFile read_frame_file(std::istream& in);
FrameFile read_frame_file_from(const std::string& path);
ModelFile read_model_file(std::istream& in);
ModelFile read_model_file_from(const std::string& path);

std::string write_frame_file(const std::string& name, const Frame& frame,
                             const std::vector<std::string>& comments = {});
std::string write_model_file(const std::string& name, const Model& model,
                             const std::vector<std::string>& comments = {});

}  // namespace su

#endif  // SU_IO_HPP
