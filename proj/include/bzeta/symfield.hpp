#pragma once

#include "bzeta/symfield/var.hpp"
#include "bzeta/symfield/poly.hpp"
#include "bzeta/symfield/gcd.hpp"
#include "bzeta/symfield/ratfunc.hpp"
#include "bzeta/symfield/matrix.hpp"
#include "bzeta/symfield/parse.hpp"
