#pragma once

#include "braidrelax/error.hpp"
#include "braidrelax/word.hpp"
#include "braidrelax/coding.hpp"
#include "braidrelax/relax.hpp"
#include "braidrelax/artin.hpp"
#include "braidrelax/b3_ball.hpp"
#include "braidrelax/harness.hpp"
#include "braidrelax/serialize.hpp"
