#pragma once

#include "bzeta/padicring/case23.hpp"
#include "bzeta/padicring/galois.hpp"
#include "bzeta/padicring/gauss.hpp"
#include "bzeta/padicring/residue.hpp"
#include "bzeta/padicring/smith.hpp"
#include "bzeta/padicring/yeta.hpp"
