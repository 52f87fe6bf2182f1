#pragma once

#include "calderon.hpp"
#include "extremal.hpp"
#include "fixtures.hpp"
#include "functional.hpp"
#include "io.hpp"
#include "polynomial.hpp"
#include "reproduce.hpp"
#include "sos.hpp"
#include "toeplitz.hpp"
