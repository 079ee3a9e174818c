#ifndef GQC_HPP
#define GQC_HPP

#include "gqc/bounds.hpp"
#include "gqc/codespec.hpp"
#include "gqc/construct.hpp"
#include "gqc/cyclic.hpp"
#include "gqc/duality.hpp"
#include "gqc/errors.hpp"
#include "gqc/field.hpp"
#include "gqc/gf.hpp"
#include "gqc/gqc.hpp"
#include "gqc/lincode.hpp"
#include "gqc/polyring.hpp"
#include "gqc/tabulate.hpp"

#endif  // GQC_HPP
