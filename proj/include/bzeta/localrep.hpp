#pragma once

#include "bzeta/localrep/rep.hpp"
#include "bzeta/localrep/factors.hpp"
