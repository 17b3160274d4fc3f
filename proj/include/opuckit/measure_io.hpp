#ifndef OPUCKIT_MEASURE_IO_HPP
#define OPUCKIT_MEASURE_IO_HPP

#include <string>

#include <json.hpp>

#include "opuckit/measures.hpp"

namespace opuckit {

// Complex literal grammar used everywhere a complex number crosses the CLI
// or JSON boundary: "a+bi" / "a-bi" / "a" / "bi", decimal only.
// Throws std::invalid_argument on anything else.
Complex parseComplex(const std::string& text);
std::string formatComplex(Complex z);

// Family descriptor, e.g. {"family":"geronimus","alpha":"-0.5"}.  Complex
// fields accept either the literal string form or a plain JSON number.
MeasureModel measureFromJson(const nlohmann::json& j);
MeasureModel measureFromDescriptor(const std::string& text);
nlohmann::json measureToJson(const MeasureModel& m);

}  // namespace opuckit

#endif
