#include "clhopf/cliffordization/forms.hpp"

namespace clhopf {

const char* to_string(FormRole role) { return role == FormRole::Scalar ? "eta" : "xi"; }

}  // namespace clhopf
