#pragma once

// Declarative rule catalog: one stanza per figure, one block per case table.
// Kept as plain text so each line can be compared with its source by eye.
//
// figure <id>
//   target 2k | 2k-1 | k         colour being removed
//   phase mono | over | under
//   parent, class ml+r, only l=v, let x=E, when E=F | ...
//   labels / pattern / new       arc labels; pattern labels are the colours
//                                read off the untouched diagram
//   fox L : o ; u                L = 2o - u at a crossing of the replacement
//   make <construction>          how the engine realises the figure
//   exclude E=F -> <id>          sub-instance handled elsewhere
//
// table <id> on <figure> [when ...]
//   lhs=rhs => R eqs [@class] | ... -> targets   reduction to a sub-instance
//            | X E=v                              forbidden colour
//            | X! claim | claim                   modulus / ordering conflict
//            | V E=v                              admissible value
// chain <id> on <figure> [lmin n]
//   e1 < e2 <= ...               strict ordering of labels for l >= lmin

namespace foxcolor::catalog_text {

inline constexpr const char* figures = R"DSL(
figure fig:eps1
  target 2k
  phase mono
  labels a ; 2k ; 2a+1
  pattern a
  new 2a+1
  fox 2a+1 : a ; 2k
  make cover a

figure fig:eps2
  target 2k
  phase over
  labels a ; 2k ; 2a+1 ; -2-a ; 3a+2
  pattern a ; -2-a
  new 2a+1 ; -2-a ; 3a+2
  fox 2a+1 : a ; 2k
  fox -2-a : a ; 3a+2
  fox 3a+2 : a ; -2-a
  make cover a

figure fig:eps3
  target 2k
  phase under
  labels a ; 2k ; 2a+1 ; 2a-b ; 2a-2b-1 ; b ; 2b+1
  pattern a ; b ; 2a+1 ; 2b+1
  new 2a-b ; 2a-2b-1
  fox 2a-b : a ; b
  fox 2a-2b-1 : a ; 2b+1
  make slide

figure fig:red3b=2a+1
  target 2k
  phase under
  parent fig:eps3
  let b=2a+1
  labels a ; 2k ; 2a+1 ; 3a+2 ; 4a+3
  pattern a ; b ; 2a+1 ; 2b+1
  new 3a+2
  fox 3a+2 : 2a+1 ; a
  make reverse

figure fig:red3b=a
  target 2k
  phase under
  parent fig:eps3
  let b=a
  labels a ; 2k ; 2a+1 ; 3a+2 ; 4a+3
  pattern a ; b ; 2a+1 ; 2b+1
  new 3a+2 ; 4a+3
  fox 3a+2 : 2a+1 ; a
  fox 4a+3 : 2a+1 ; 2k
  make pair 2a+1

figure fig:red4
  target 2k-1
  phase mono
  labels a ; 2k-1 ; 2a+2
  pattern a
  new 2a+2
  fox 2a+2 : a ; 2k-1
  make cover a
  exclude a=k-1 -> fig:red4bis

figure fig:red4bis
  target 2k-1
  phase mono
  parent fig:red4
  let a=k-1
  labels a ; 2k-1 ; k-1 ; k-2 ; -3
  pattern a
  new k-2 ; -3
  fox k-2 : 2k-1 ; a
  fox -3 : k-2 ; 2k-1

figure fig:red5
  target 2k-1
  phase over
  labels a ; 2k-1 ; 2a+2 ; -4-a ; 3a+4
  pattern a ; -4-a
  new 2a+2 ; -4-a ; 3a+4
  fox 2a+2 : a ; 2k-1
  fox -4-a : a ; 3a+4
  fox 3a+4 : a ; -4-a
  make cover a

figure fig:red5bis
  target 2k-1
  phase over
  parent fig:red5
  when a=k-1 | 3a=-5
  labels a ; 2k-1 ; -4-a ; -6-2a ; -8-3a
  pattern a ; -4-a
  new -6-2a ; -8-3a
  fox -6-2a : -4-a ; 2k-1
  fox -8-3a : -4-a ; a
  make cover -4-a

figure fig:red6
  target 2k-1
  phase under
  labels a ; 2k-1 ; 2a+2 ; 2b+2 ; 2a-2b-2 ; b ; 2a-b
  pattern a ; b ; 2a+2 ; 2b+2
  new 2a-b ; 2a-2b-2
  fox 2a-b : a ; b
  fox 2a-2b-2 : a ; 2b+2
  make slide

figure fig:red6b2a+1
  target 2k-1
  phase under
  parent fig:red6
  let b=2a+1
  labels a ; 2k-1 ; 2a+1 ; 2a ; 2a+2 ; 3a+2 ; 4a+4
  pattern a ; b ; 2a+2 ; 2b+2
  new 3a+2 ; 2a
  fox 3a+2 : 2a+1 ; a
  fox 2a : 2a+1 ; 2a+2
  make reverse

figure fig:red7
  target 2k-1
  phase under
  parent fig:red6b2a+1
  let a=k
  let b=2a+1
  labels 0 ; 1 ; -1 ; 2 ; k ; k+1 ; -2
  pattern a ; b ; 2a+2 ; 2b+2
  new k+1
  fox k+1 : 0 ; k

figure fig:red8
  target 2k-1
  phase under
  parent fig:red6b2a+1
  class 3l+1
  let a=l-1
  let b=2a+1
  labels 0 ; -2 ; 2l ; 2l-1 ; l+1 ; 2l-2 ; l-1 ; 3l-3
  pattern a ; b ; 2a+2 ; 2b+2
  new l+1 ; 3l-3
  fox l+1 : 0 ; 2l
  fox 3l-3 : -2 ; 0

figure fig:red9
  target 2k-1
  phase under
  parent fig:red6b2a+1
  class 3l+2
  let a=2l
  let b=2a+1
  labels 0 ; -2 ; 2l ; 2l+2 ; l-1 ; l-2 ; -4 ; l
  pattern a ; b ; 2a+2 ; 2b+2
  new 2l+2
  fox 2l+2 : 0 ; l

figure fig:red10
  target 2k-1
  phase under
  parent fig:red6
  let b=2a+2
  labels a ; 2a+2 ; 3a+4 ; 4a+6 ; -2
  pattern a ; b ; 2a+2 ; 2b+2
  new 3a+4
  fox 3a+4 : 2a+2 ; a
  make reverse

figure fig:red11
  target 2k-1
  phase under
  parent fig:red10
  class 3l+1
  let a=2l-1
  let b=2a+2
  labels 0 ; -2 ; 2l ; 2l-1 ; 2l+1 ; l+1 ; 2l-2 ; 2l+2 ; l-1 ; 3l-3 ; l-2 ; -4 ; l
  pattern a ; b ; 2a+2 ; 2b+2
  new l+1 ; 2l+1
  fox l+1 : 0 ; 2l
  fox 2l+1 : 0 ; l

figure fig:red12
  target 2k-1
  phase under
  parent fig:red10
  class 3l+2
  let a=l-1
  let b=2a+2
  labels 0 ; -2 ; 2l ; 2l-1 ; 2l+1 ; l+1 ; 2l-2 ; 2l+2 ; l-1 ; 3l-3 ; l-2 ; -4 ; l
  pattern a ; b ; 2a+2 ; 2b+2
  new l+1 ; 2l+2
  fox l+1 : 0 ; 2l+1
  fox 2l+2 : 0 ; l

figure fig:red13
  target 2k-1
  phase under
  parent fig:red6
  let b=a+k
  labels a ; 2a+1 ; 2a+2 ; -2 ; a+k ; a-1 ; -3
  pattern a ; b ; 2a+2 ; 2b+2
  new a-1 ; -3
  fox a-1 : a+k ; a
  fox -3 : a+k ; 2a+2
  make reverse
  exclude a=0 -> fig:red7

figure fig:red14
  target 2k-1
  phase under
  parent fig:red6
  let b=a
  labels a ; 2a+2 ; 3a+4 ; 4a+6 ; -2
  pattern a ; b ; 2a+2 ; 2b+2
  new 3a+4 ; 4a+6
  fox 3a+4 : 2a+2 ; a
  fox 4a+6 : 2a+2 ; -2
  make pair 2a+2

figure fig:red15
  target 2k-1
  phase under
  parent fig:red14
  class 4l+1
  let a=3l-1
  let b=a
  labels -2 ; -3 ; 2l ; 2l-1 ; 2l+1 ; l+1 ; 3l-1 ; 2l-3 ; l-3 ; 2l-2 ; 2l+2 ; l-1 ; 3l-3 ; l-2
  pattern a ; b ; 2a+2 ; 2b+2
  new l-3 ; l-1 ; 2l-3 ; 2l-2
  fox l-3 : 2l-3 ; 3l-3
  fox l-1 : 2l-1 ; 3l-1
  fox 2l-3 : -2 ; 2l
  fox 2l-2 : -2 ; 2l-1

figure fig:red16
  target 2k-1
  phase under
  parent fig:red14
  class 4l+3
  let a=l-1
  let b=a
  labels -2 ; -3 ; 2l ; 2l-1 ; 2l+1 ; l+1 ; 3l-1 ; 3l+1 ; 2l-3 ; l-3 ; 2l-2 ; 2l+2 ; l-1 ; 3l-3 ; l-2
  pattern a ; b ; 2a+2 ; 2b+2
  new 2l-2 ; 2l-1 ; 3l-1 ; 3l+1
  fox 2l-2 : -2 ; 2l+1
  fox 2l-1 : -2 ; 2l
  fox 3l-1 : -3 ; l-2
  fox 3l+1 : -2 ; l-2

figure fig:red17
  target 2k-1
  phase under
  parent fig:red14
  class 3l+1
  let a=2l-1
  let b=a
  labels 0 ; -2 ; -1 ; 2l ; 2l-1 ; 2l+1 ; l+1 ; 3l-1 ; 3l+1 ; 2l-3 ; l-3 ; 2l-2 ; 2l+2 ; l-1 ; 3l-3 ; l-2 ; l
  pattern a ; b ; 2a+2 ; 2b+2
  new l ; 2l+1
  fox l : 0 ; 2l+1
  fox 2l+1 : 0 ; l

figure fig:red18
  target 2k-1
  phase under
  parent fig:red14
  class 3l+2
  let a=l-1
  let b=a
  labels 0 ; -2 ; -1 ; 2l ; 2l-1 ; 2l+1 ; l+1 ; 3l-1 ; 3l+1 ; 2l-3 ; l-3 ; 2l-2 ; 2l+2 ; l-1 ; 3l-3 ; l-2 ; l
  pattern a ; b ; 2a+2 ; 2b+2
  new l ; l+1 ; 2l+1
  fox l : 0 ; 2l+2
  fox l+1 : 0 ; 2l+1
  fox 2l+1 : 0 ; l+1

figure fig:49h
  target k
  phase mono
  labels a ; k ; 2k-a ; 2a-k
  pattern a ; 2k-a
  new 2a-k
  fox 2a-k : a ; k
  make cover a

figure fig:49v
  target k
  phase mono
  parent fig:49h
  when 2a=k-1 | 2a=k-2
  labels a ; 2k-a ; -2a-2-k ; k
  pattern a ; 2k-a
  new -2a-2-k
  fox -2a-2-k : 2k-a ; k
  make cover 2k-a

figure fig:50-
  target k
  phase over
  labels a ; 3a+1 ; 2k-a ; 2a-k ; k
  pattern a ; 2k-a
  new 2a-k ; 3a+1 ; 2k-a
  fox 2a-k : a ; k
  fox 3a+1 : a ; 2k-a
  fox 2k-a : a ; 3a+1
  make cover a

figure fig:50a
  target k
  phase over
  parent fig:50-
  class 4l+1
  let a=3l
  labels 3l ; 3l+1 ; 2l ; l ; 0
  pattern a ; 2k-a
  new 3l+1
  fox 3l+1 : l ; 3l

figure fig:50b
  target k
  phase over
  parent fig:50-
  class 4l+3
  let a=l
  labels l ; l+1 ; 2l+1 ; 3l+2 ; 0
  pattern a ; 2k-a
  new 0 ; l+1
  fox 0 : 3l+2 ; 2l+1
  fox l+1 : 3l+2 ; l

figure fig:50c
  target k
  phase over
  parent fig:50-
  class 4l+1
  let a=l-1
  labels l-1 ; l+2 ; 2l ; 3l+1 ; 1
  pattern a ; 2k-a
  new l+2
  fox l+2 : 3l+1 ; l-1

figure fig:50d
  target k
  phase over
  parent fig:50-
  class 4l+3
  let a=3l+1
  labels 3l+1 ; 3l+4 ; 2l+1 ; l+1 ; 1
  pattern a ; 2k-a
  new 3l+4
  fox 3l+4 : l+1 ; 3l+1
  exclude l=2 -> fig:50e

figure fig:50e
  target k
  phase over
  parent fig:50d
  class 4l+3
  only l=2
  let a=3l+1
  labels 3 ; 1 ; -1 ; 2 ; 4 ; 5 ; 7 ; 0
  pattern a ; 2k-a
  new 1 ; 2 ; 4 ; 0
  fox 1 : 3 ; 5
  fox 2 : 3 ; 4
  fox 4 : 3 ; 2
  fox 0 : 1 ; 2

figure fig:50f
  target k
  phase over
  parent fig:50-
  class 6l+1
  let a=4l
  labels 4l ; 0 ; 3l ; 2l ; l
  pattern a ; 2k-a
  new l
  fox l : 2l ; 3l

figure fig:50g
  target k
  phase over
  parent fig:50-
  class 6l+5
  let a=2l+1
  labels 2l+1 ; 0 ; 3l+2 ; 4l+3 ; 5l+4
  pattern a ; 2k-a
  new 5l+4
  fox 5l+4 : 4l+3 ; 3l+2

figure fig:54
  target k
  phase under
  labels a ; b ; k ; 2a-2b+k ; 2a-k ; 2a-b ; 2b-k
  pattern a ; b ; 2a-k ; 2b-k
  new 2a-b ; 2a-2b+k
  fox 2a-b : a ; b
  fox 2a-2b+k : a ; 2b-k
  make slide

figure fig:55
  target k
  phase under
  parent fig:54
  let b=2a+1
  labels a ; 2a-k ; 2a+2+k ; 2a+1 ; 4a+2-k ; k ; 3a+2
  pattern a ; b ; 2a-k ; 2b-k
  new 3a+2 ; 2a+2+k
  fox 3a+2 : 2a+1 ; a
  fox 2a+2+k : 2a+1 ; 2a-k
  make reverse

figure fig:72aa
  target k
  phase under
  parent fig:55
  class 4l+1
  let a=3l-1
  let b=2a+1
  labels -3 ; 2l-5 ; 2l ; 2l-4 ; l-4 ; 2l-1 ; 2l-3 ; 3l-1 ; 2l-2
  pattern a ; b ; 2a-k ; 2b-k
  new l-4 ; 2l-5 ; 2l-3 ; 2l-1
  fox l-4 : -3 ; 3l-1
  fox 2l-5 : -3 ; 2l
  fox 2l-3 : -3 ; 2l-2
  fox 2l-1 : -3 ; 2l-4
  exclude l=3 -> fig:72aaa

figure fig:72aaa
  target k
  phase under
  parent fig:72aa
  class 4l+1
  only l=3
  let a=3l-1
  let b=2a+1
  labels -3 ; 8 ; -1 ; 1 ; 7 ; 5 ; 3
  pattern a ; b ; 2a-k ; 2b-k
  new 1 ; 7 ; 5 ; 3
  fox 1 : -3 ; k
  fox 7 : -1 ; b
  fox 5 : -3 ; 2b-k
  fox 3 : -3 ; b

figure fig:73a
  target k
  phase under
  parent fig:55
  class 4l+3
  let a=l-1
  let b=2a+1
  labels 3l-2 ; 2l-1 ; 2l-4 ; 2l+1 ; 2l-3 ; 2l-2 ; l-1 ; l-5 ; -3 ; 2l
  pattern a ; b ; 2a-k ; 2b-k
  new 2l-4 ; 2l-2 ; 2l ; 3l-2
  fox 2l-4 : 3l-2 ; -3
  fox 2l-2 : 2l-1 ; 2l
  fox 2l : 2l-1 ; 2l-2
  fox 3l-2 : -3 ; l-1

figure fig:70
  target k
  phase under
  parent fig:55
  class 6l+1
  let a=5l
  let b=2a+1
  labels 5l ; 4l ; 5l-1 ; 3l-1 ; 3l ; 4l-1 ; l-1 ; l
  pattern a ; b ; 2a-k ; 2b-k
  new 3l-1 ; 4l-1 ; 5l-1
  fox 3l-1 : 5l ; l
  fox 4l-1 : l-1 ; 4l
  fox 5l-1 : 3l-1 ; l-1

figure fig:71
  target k
  phase under
  parent fig:55
  class 6l+5
  let a=l
  let b=2a+1
  labels 2l+1 ; 3l+1 ; 2l+2 ; 3l+2 ; 2l ; l-1 ; l+1 ; 5l+3 ; l
  pattern a ; b ; 2a-k ; 2b-k
  new l-1 ; 2l ; 3l+1
  fox l-1 : 3l+1 ; 5l+3
  fox 2l : 2l+1 ; 2l+2
  fox 3l+1 : 2l+1 ; l+1

figure fig:70aa
  target k
  phase under
  parent fig:55
  class 6l+1
  let a=2l-1
  let b=2a+1
  labels l-2 ; 2l-1 ; 4l-1 ; 3l ; 5l-2 ; 3l-3 ; 2l-4 ; l-5 ; -4
  pattern a ; b ; 2a-k ; 2b-k
  new l-5 ; 2l-4 ; 3l-3
  fox l-5 : 5l-2 ; 3l
  fox 2l-4 : 5l-2 ; 2l-1
  fox 3l-3 : 5l-2 ; l-2
  exclude l=3 -> fig:70aabis

figure fig:70aabis
  target k
  phase under
  parent fig:70aa
  class 6l+1
  only l=3
  let a=2l-1
  let b=2a+1
  labels 6 ; 2 ; -4 ; -2 ; 13 ; 8 ; 10
  pattern a ; b ; 2a-k ; 2b-k
  new 6 ; 2 ; -4 ; 8 ; 10
  fox 6 : 2 ; -2
  fox 2 : 6 ; 10
  fox -4 : 2 ; 8
  fox 8 : 2 ; -4
  fox 10 : 6 ; 2

figure fig:71aa
  target k
  phase under
  parent fig:55
  class 6l+5
  let a=4l+2
  let b=2a+1
  labels 2l ; 3l+1 ; l-2 ; l-3 ; 3l+2 ; 2l-1 ; 4l+2 ; 5l-1 ; -3 ; 5l+2
  pattern a ; b ; 2a-k ; 2b-k
  new l-3 ; 2l-1 ; 3l+1
  fox l-3 : 2l-1 ; 3l+1
  fox 2l-1 : l-2 ; -3
  fox 3l+1 : 2l-1 ; l-3
  exclude l=2 -> fig:71aabis

figure fig:71aabis
  target k
  phase under
  parent fig:71aa
  class 6l+5
  only l=2
  let a=4l+2
  let b=2a+1
  labels -3 ; 12 ; -1 ; 3 ; 7 ; 11 ; 9
  pattern a ; b ; 2a-k ; 2b-k
  new -3 ; 3 ; 7 ; 11 ; 9
  fox -3 : 12 ; a
  fox 3 : -3 ; k
  fox 7 : -3 ; b
  fox 11 : -3 ; 2b-k
  fox 9 : 3 ; -3

figure fig:552a+2
  target k
  phase under
  parent fig:54
  let b=2a+2
  labels a ; 2a-k ; 2a+4+k ; 2a+2 ; 4a+4-k ; k ; 3a+4
  pattern a ; b ; 2a-k ; 2b-k
  new 3a+4 ; 2a+4+k
  fox 3a+4 : 2a+2 ; a
  fox 2a+4+k : 2a+2 ; 2a-k
  make reverse

figure fig:72aa2a+2
  target k
  phase under
  parent fig:552a+2
  class 4l+1
  let a=l-2
  let b=2a+2
  labels -4 ; 2l-7 ; 2l ; 2l-4 ; l-2 ; 2l-5 ; 2l-3 ; 3l-5 ; 2l-2
  pattern a ; b ; 2a-k ; 2b-k
  new 2l-7 ; 2l-5 ; 2l-3 ; 3l-5
  fox 2l-7 : -4 ; 2l
  fox 2l-5 : -4 ; 2l-2
  fox 2l-3 : -4 ; 2l-4
  fox 3l-5 : -4 ; l-2
  exclude l=3 -> fig:72aaa2a+2

figure fig:72aaa2a+2
  target k
  phase under
  parent fig:72aa2a+2
  class 4l+1
  only l=3
  let a=l-2
  let b=2a+2
  labels 4 ; 9 ; -1 ; 1 ; 7 ; 5 ; 3
  pattern a ; b ; 2a-k ; 2b-k
  new 7 ; 5 ; 3
  fox 7 : 4 ; 1
  fox 5 : 4 ; 3
  fox 3 : 4 ; 5

figure fig:73a2a+2
  target k
  phase under
  parent fig:552a+2
  class 4l+3
  let a=3l
  let b=2a+2
  labels 3l ; 2l-1 ; 2l-4 ; 2l+1 ; 2l-3 ; 2l-2 ; 2l-6 ; l-5 ; -4 ; 2l
  pattern a ; b ; 2a-k ; 2b-k
  new l-5 ; 2l-6 ; 2l-4 ; 2l-2
  fox l-5 : -4 ; 3l
  fox 2l-6 : 2l-4 ; 2l-2
  fox 2l-4 : 2l-3 ; 2l-2
  fox 2l-2 : 2l-1 ; 2l
  exclude l=2 -> fig:73a2a+211
  exclude l=4 -> fig:73a2a+219

figure fig:73a2a+211
  target k
  phase under
  parent fig:73a2a+2
  class 4l+3
  only l=2
  let a=3l
  let b=2a+2
  labels -3 ; -2 ; 2 ; 0 ; 3 ; 4 ; -4
  pattern a ; b ; 2a-k ; 2b-k
  new -3 ; 2 ; 0 ; 4
  fox -3 : 2 ; -4
  fox 2 : -3 ; 3
  fox 0 : -3 ; k
  fox 4 : -3 ; 2b-k

figure fig:73a2a+219
  target k
  phase under
  parent fig:73a2a+2
  class 4l+3
  only l=4
  let a=3l
  let b=2a+2
  labels 12 ; -1 ; 2 ; 11 ; 8 ; 5 ; -4
  pattern a ; b ; 2a-k ; 2b-k
  new 2 ; 11 ; 8
  fox 2 : -1 ; -4
  fox 11 : 2 ; 12
  fox 8 : -1 ; k

figure fig:72aa2a+2k-5
  target k
  phase under
  parent fig:552a+2
  class 4l+1
  let a=3l-2
  let b=2a+2
  labels -5 ; 2l-9 ; 2l ; 2l-6 ; 3l-2 ; 2l-3 ; l-7
  pattern a ; b ; 2a-k ; 2b-k
  new l-7 ; 2l-9
  fox l-7 : -5 ; 3l-2
  fox 2l-9 : -5 ; 2l
  exclude l=4 -> fig:72aaa2a+2k-5

figure fig:72aaa2a+2k-5
  target k
  phase under
  parent fig:72aa2a+2k-5
  class 4l+1
  only l=4
  let a=3l-2
  let b=2a+2
  labels -3 ; -1 ; 5 ; 2 ; 7 ; 9 ; -5
  pattern a ; b ; 2a-k ; 2b-k
  new -3 ; 7 ; 9
  fox -3 : 2 ; 7
  fox 7 : -1 ; k
  fox 9 : -3 ; 2

figure fig:73a2a+2k-5
  target k
  phase under
  parent fig:552a+2
  class 4l+3
  let a=l-2
  let b=2a+2
  labels l-2 ; 2l-2 ; 2l-5 ; 2l+1 ; 2l-8 ; 3l-5 ; -5 ; 2l
  pattern a ; b ; 2a-k ; 2b-k
  new 2l-8 ; 3l-5
  fox 2l-8 : 2l-5 ; 2l-2
  fox 3l-5 : -5 ; l-2

figure fig:703a-5
  target k
  phase under
  parent fig:552a+2
  class 6l+1
  let a=4l-1
  let b=2a+2
  labels 3l ; 5l-2 ; 4l-1 ; 2l-1 ; l-2 ; 3l-3 ; 6l-3 ; l-1 ; l-5 ; 2l-4
  pattern a ; b ; 2a-k ; 2b-k
  new l-5 ; 2l-4 ; 3l-3 ; 6l-3
  fox l-5 : 5l-2 ; 3l
  fox 2l-4 : 5l-2 ; 2l-1
  fox 3l-3 : 5l-2 ; l-2
  fox 6l-3 : 5l-2 ; 4l-1
  exclude l=3 -> fig:red703a-5l=3

figure fig:red703a-5l=3
  target k
  phase under
  parent fig:703a-5
  class 6l+1
  only l=3
  let a=4l-1
  let b=2a+2
  labels 13 ; 15 ; -2 ; 2 ; 6 ; 8 ; 10
  pattern a ; b ; 2a-k ; 2b-k
  new 15 ; 2 ; 6 ; 8 ; 10
  fox 15 : 13 ; a
  fox 2 : 13 ; b
  fox 6 : 13 ; 2b-k
  fox 8 : 2 ; 15
  fox 10 : 15 ; 2b-k

figure fig:red713a-5
  target k
  phase under
  parent fig:552a+2
  class 6l+5
  let a=2l
  let b=2a+2
  labels 2l ; l-2 ; 4l+2 ; 3l+2 ; 5l+2 ; 2l-1 ; 3l+1 ; 6l+2 ; l-3 ; -3
  pattern a ; b ; 2a-k ; 2b-k
  new l-3 ; 2l-1 ; 3l+1
  fox l-3 : 5l+2 ; 3l+2
  fox 2l-1 : l-2 ; 6l+2
  fox 3l+1 : 5l+2 ; l-2
  exclude l=2 -> fig:red713a-5l=3

figure fig:red713a-5l=3
  target k
  phase under
  parent fig:red713a-5
  class 6l+5
  only l=2
  let a=2l
  let b=2a+2
  labels -1 ; 3 ; 7 ; 9 ; 11 ; 12 ; 14
  pattern a ; b ; 2a-k ; 2b-k
  new 3 ; 7 ; 9 ; 11 ; 14
  fox 3 : -1 ; 12
  fox 7 : -1 ; k
  fox 9 : 3 ; 14
  fox 11 : -1 ; a
  fox 14 : 3 ; 9

figure fig:752a-k
  target k
  phase under
  parent fig:54
  let b=2a-k
  labels a ; 2a-k ; 2a+2+k ; 2a+1 ; 4a+k+2 ; k ; 3a+1
  pattern a ; b ; 2a-k ; 2b-k
  new 3a+1
  fox 3a+1 : 2a-k ; a
  make reverse

figure fig:752a-kk=3l
  target k
  phase under
  parent fig:752a-k
  class 6l+1
  let a=4l
  let b=2a-k
  labels 3l ; 4l ; 5l ; l-1 ; 3l-1 ; 4l-1 ; 5l-1
  pattern a ; b ; 2a-k ; 2b-k
  new 3l-1 ; 4l-1 ; 5l-1
  fox 3l-1 : l-1 ; 5l
  fox 4l-1 : l-1 ; 4l
  fox 5l-1 : l-1 ; 3l

figure fig:752a-kk=3l+2
  target k
  phase under
  parent fig:752a-k
  class 6l+5
  let a=2l+1
  let b=2a-k
  labels l ; 2l+1 ; 3l+2 ; 5l+3 ; 3l+1 ; l-1 ; 2l
  pattern a ; b ; 2a-k ; 2b-k
  new l-1 ; 2l ; 3l+1
  fox l-1 : 5l+3 ; 3l+2
  fox 2l : 5l+3 ; 2l+1
  fox 3l+1 : 5l+3 ; l

figure fig:redk2(b-a)=k+1k=2l
  target k
  phase under
  parent fig:54
  class 4l+1
  let b=a+3l+1
  labels 0 ; a ; 2a-2l ; 2l ; a+3l+1 ; a+2l+1 ; 2a+1
  pattern a ; b ; 2a-k ; 2b-k
  new a+2l+1
  fox a+2l+1 : a+3l+1 ; a
  make reverse

figure fig:redk2(b-a)=k+1k=2la=2l-2
  target k
  phase under
  parent fig:redk2(b-a)=k+1k=2l
  class 4l+1
  let a=2l-2
  let b=a+3l+1
  labels 2l-4 ; 2l-2 ; 2l ; l-2 ; -4 ; 2l-6 ; 2l-8 ; 3l-6 ; 4l-4
  pattern a ; b ; 2a-k ; 2b-k
  new 2l-8 ; 2l-6 ; 3l-6 ; 4l-4
  fox 2l-8 : 2l-4 ; 2l
  fox 2l-6 : 2l-4 ; 2l-2
  fox 3l-6 : 2l-4 ; l-2
  fox 4l-4 : 2l-4 ; -4
  exclude l=3 -> fig:redk2(b-a)=k+1k=2la=2l-2l=2

figure fig:redk2(b-a)=k+1k=2la=2l-2l=2
  target k
  phase under
  parent fig:redk2(b-a)=k+1k=2la=2l-2
  class 4l+1
  only l=3
  let a=2l-2
  let b=a+3l+1
  labels 1 ; 2 ; 0 ; 3 ; 4 ; 5 ; 6 ; 8 ; 9 ; -2 ; 10
  pattern a ; b ; 2a-k ; 2b-k
  new 0 ; 3 ; 5 ; 8 ; 10
  fox 0 : 1 ; 2
  fox 3 : 2 ; 1
  fox 5 : 1 ; 10
  fox 8 : 2 ; 9
  fox 10 : 1 ; 5

figure fig:redk2(b-a)=k+1k=2l+1
  target k
  phase under
  parent fig:54
  class 4l+3
  let b=a+l+1
  labels 0 ; a ; 2a-2l-1 ; 2l+1 ; a+l+1 ; a+2l+2 ; 2a+1
  pattern a ; b ; 2a-k ; 2b-k
  new a+2l+2
  fox a+2l+2 : a+l+1 ; a
  make reverse

figure fig:redk2(b-a)=k+1k=2l+1a=2l-1
  target k
  phase under
  parent fig:redk2(b-a)=k+1k=2l+1
  class 4l+3
  let a=2l-1
  let b=a+l+1
  labels 2l-1 ; 2l-3 ; 3l ; -4 ; 2l+1 ; 2l-4 ; 2l-2 ; 2l-6 ; l-5
  pattern a ; b ; 2a-k ; 2b-k
  new l-5 ; 2l-6 ; 2l-4 ; 2l-2
  fox l-5 : -4 ; 3l
  fox 2l-6 : -4 ; 2l+1
  fox 2l-4 : 2l-3 ; 2l-2
  fox 2l-2 : 2l-3 ; 2l-4
  exclude l=2 -> fig:752a-kk=3l+2l=2
  exclude l=4 -> fig:752a-kk=3l+2l=4

figure fig:752a-kk=3l+2l=2
  target k
  phase under
  parent fig:redk2(b-a)=k+1k=2l+1a=2l-1
  class 4l+3
  only l=2
  let a=2l-1
  let b=a+l+1
  labels 1 ; 2 ; 0 ; 3 ; 4 ; 5 ; 6 ; 8 ; 9 ; -2 ; 7
  pattern a ; b ; 2a-k ; 2b-k
  new 2 ; 0 ; 4 ; 8
  fox 2 : 1 ; 0
  fox 0 : 1 ; 2
  fox 4 : 1 ; 9
  fox 8 : 1 ; 5

figure fig:752a-kk=3l+2l=4
  target k
  phase under
  parent fig:redk2(b-a)=k+1k=2l+1a=2l-1
  class 4l+3
  only l=4
  let a=2l-1
  let b=a+l+1
  labels 1 ; 2 ; 0 ; 3 ; 4 ; 5 ; 6 ; 12 ; 9 ; -4 ; 7
  pattern a ; b ; 2a-k ; 2b-k
  new 1 ; 2 ; 0 ; 3 ; 4 ; 6
  fox 1 : 2 ; 3
  fox 2 : 1 ; 0
  fox 0 : 1 ; 2
  fox 3 : 2 ; 1
  fox 4 : 2 ; 0
  fox 6 : 1 ; -4

figure fig:redk2(b-a)=k+2k=2l
  target k
  phase under
  parent fig:54
  class 4l+1
  let b=a+l+1
  labels 1 ; a ; 2a-2l ; 2l ; a+l+1 ; a+2l+2 ; 2a+2
  pattern a ; b ; 2a-k ; 2b-k
  new a+2l+2
  fox a+2l+2 : a+l+1 ; a
  make reverse

figure fig:redk2(b-a)=k+2k=2la=2l-2tritri
  target k
  phase under
  parent fig:redk2(b-a)=k+2k=2l
  class 4l+1
  let a=2l-2
  let b=a+l+1
  labels 2l-4 ; 2l-2 ; 2l ; 3l-1 ; -3 ; 2l-6 ; 2l-8 ; l-7 ; 4l-5
  pattern a ; b ; 2a-k ; 2b-k
  new l-7 ; 2l-8 ; 2l-6 ; 4l-5
  fox l-7 : 2l-4 ; 3l-1
  fox 2l-8 : 2l-4 ; 2l
  fox 2l-6 : 2l-4 ; 2l-2
  fox 4l-5 : 2l-4 ; -3
  exclude l=3 -> fig:redl=k2(b-a)=k+2k=2la=2l-2bistri

figure fig:redl=k2(b-a)=k+2k=2la=2l-2bistri
  target k
  phase under
  parent fig:redk2(b-a)=k+2k=2la=2l-2tritri
  class 4l+1
  only l=3
  let a=2l-2
  let b=a+l+1
  labels 1 ; 2 ; 0 ; 3 ; 4 ; 5 ; 6 ; 8 ; 9 ; -3 ; -2 ; 7
  pattern a ; b ; 2a-k ; 2b-k
  new 1 ; 0 ; 3 ; 5 ; 9 ; 7
  fox 1 : 2 ; 3
  fox 0 : 1 ; 2
  fox 3 : 2 ; 1
  fox 5 : 1 ; -3
  fox 9 : 1 ; 6
  fox 7 : 1 ; 8

figure fig:redk2(b-a)=k+2k=2la=2l-2
  target k
  phase under
  parent fig:redk2(b-a)=k+2k=2l
  class 4l+1
  let a=2l-3
  let b=a+l+1
  labels 2l-6 ; 2l-3 ; 3l-2 ; 2l ; l-7 ; 2l-9 ; 4l-4
  pattern a ; b ; 2a-k ; 2b-k
  new l-7 ; 2l-9
  fox l-7 : 4l-4 ; 3l-2
  fox 2l-9 : 2l-6 ; 2l-3
  exclude l=4 -> fig:752a-kk+2k=3l+2

figure fig:752a-kk+2k=3l+2
  target k
  phase under
  parent fig:redk2(b-a)=k+2k=2la=2l-2
  class 4l+1
  only l=4
  let a=2l-3
  let b=a+l+1
  labels 1 ; 2 ; 0 ; 10 ; 4 ; 5 ; 14 ; 8 ; 9 ; -1 ; 12 ; 7
  pattern a ; b ; 2a-k ; 2b-k
  new 1 ; 0 ; 4 ; 14 ; 9 ; 7
  fox 1 : 0 ; -1
  fox 0 : 1 ; 2
  fox 4 : 2 ; 0
  fox 14 : 1 ; 5
  fox 9 : 1 ; 10
  fox 7 : 1 ; 12

figure fig:redk2(b-a)=k+2k=2l+
  target k
  phase under
  parent fig:54
  class 4l+3
  let b=a+3l+3
  labels 1 ; a ; 2a+2l+2 ; 2l+1 ; a+3l+3 ; a+2l+3 ; 2a+2
  pattern a ; b ; 2a-k ; 2b-k
  new a+2l+3
  fox a+2l+3 : a+3l+3 ; a
  make reverse

figure fig:redk2(b-a)=k+2k=2l+1a=2l-1
  target k
  phase under
  parent fig:redk2(b-a)=k+2k=2l+
  class 4l+3
  let a=2l-1
  let b=a+3l+3
  labels 2l-3 ; 2l-1 ; 2l+1 ; l-1 ; -3 ; 2l-5 ; 2l-7 ; 3l-5 ; 4l-3
  pattern a ; b ; 2a-k ; 2b-k
  new 2l-7 ; 2l-5 ; 3l-5 ; 4l-3
  fox 2l-7 : 2l-3 ; 2l+1
  fox 2l-5 : 2l-3 ; 2l-1
  fox 3l-5 : 2l-3 ; l-1
  fox 4l-3 : 2l-3 ; -3
  exclude l=2 -> fig:red2(b-a)=k+2k=2l+1

figure fig:red2(b-a)=k+2k=2l+1
  target k
  phase under
  parent fig:redk2(b-a)=k+2k=2l+1a=2l-1
  class 4l+3
  only l=2
  let a=2l-1
  let b=a+3l+3
  labels 1 ; 2 ; 0 ; 3 ; 4 ; 5 ; 6 ; 8 ; 9 ; -3 ; -2 ; 7
  pattern a ; b ; 2a-k ; 2b-k
  new 2 ; 0 ; 4 ; 6 ; 7
  fox 2 : 1 ; 0
  fox 0 : 1 ; 2
  fox 4 : 1 ; 9
  fox 6 : 1 ; 7
  fox 7 : 1 ; 6

figure fig:redk2(b-a)=k+2k=2l+1a=2l-2
  target k
  phase under
  parent fig:redk2(b-a)=k+2k=2l+
  class 4l+3
  let a=2l-2
  let b=a+3l+3
  labels 2l-5 ; 2l-2 ; 3l-5 ; 2l+1 ; l-2 ; 2l-8 ; 4l-2
  pattern a ; b ; 2a-k ; 2b-k
  new 2l-8 ; 3l-5
  fox 2l-8 : 2l-5 ; 2l-2
  fox 3l-5 : 4l-2 ; l-2

figure fig:red65
  target k
  phase under
  parent fig:54
  let b=a
  labels a ; k ; 2a-k ; 3a+1 ; 4a+k+2
  pattern a ; b ; 2a-k ; 2b-k
  new 3a+1 ; 4a+k+2
  fox 3a+1 : 2a-k ; a
  fox 4a+k+2 : 2a-k ; k
  make pair 2a-k

figure fig:red116bis
  target k
  phase under
  parent fig:red65
  class 6l+1
  let a=4l
  let b=a
  labels 5l ; 4l ; 3l ; 6l ; 3l+1 ; l ; 2l+1 ; 4l+1 ; 5l+1
  pattern a ; b ; 2a-k ; 2b-k
  new 2l+1 ; 3l+1 ; 4l+1 ; 5l+1
  fox 2l+1 : 3l+1 ; 4l+1
  fox 3l+1 : l ; 5l
  fox 4l+1 : 3l+1 ; 2l+1
  fox 5l+1 : l ; 3l
  exclude l=2 -> fig:red1161

figure fig:red1161
  target k
  phase under
  parent fig:red116bis
  class 6l+1
  only l=2
  let a=4l
  let b=a
  labels 1 ; -1 ; 3 ; 6 ; 7 ; 10 ; 8 ; 5
  pattern a ; b ; 2a-k ; 2b-k
  new 1 ; 3 ; 7 ; 5
  fox 1 : -1 ; 10
  fox 3 : 1 ; -1
  fox 7 : 1 ; 8
  fox 5 : 1 ; 10

figure fig:red111
  target k
  phase under
  parent fig:red65
  class 6l+5
  let a=2l+1
  let b=a
  labels -1 ; 5l+3 ; 4l+2 ; 3l+2 ; 2l ; 3l+1 ; l ; 2l+1 ; 4l+1 ; 5l+1
  pattern a ; b ; 2a-k ; 2b-k
  new 2l ; 3l+1 ; 4l+2 ; 5l+3
  fox 2l : 5l+3 ; 2l+1
  fox 3l+1 : -1 ; 3l+2
  fox 4l+2 : -1 ; 2l+1
  fox 5l+3 : -1 ; l

figure fig:red126
  target k
  phase under
  parent fig:red65
  class 8l+1
  let a=5l
  let b=a
  labels 5l ; 4l ; 2l ; 6l ; 7l ; 0 ; 2l+1 ; 7l+1 ; 5l+1 ; 6l+1
  pattern a ; b ; 2a-k ; 2b-k
  new 2l ; 5l+1 ; 6l+1 ; 7l+1
  fox 2l : 4l ; 6l
  fox 5l+1 : 2l ; 7l
  fox 6l+1 : 2l ; 6l
  fox 7l+1 : 2l ; 5l
  exclude l=2 -> fig:red45a
  exclude l=2 -> fig:red45b

figure fig:red45a
  target k
  phase under
  parent fig:red126
  class 8l+1
  only l=2
  let a=5l
  let b=a
  labels 10 ; 12 ; 8 ; 4 ; 14
  pattern a ; b ; 2a-k ; 2b-k
  new 4 ; 14
  fox 4 : 8 ; 12
  fox 14 : 12 ; 10

figure fig:red45b
  target k
  phase under
  parent fig:red126
  class 8l+1
  only l=2
  let a=5l
  let b=a
  labels 0 ; 2 ; -2 ; 10 ; 12 ; 7 ; 4 ; 6 ; 11 ; 5 ; 13
  pattern a ; b ; 2a-k ; 2b-k
  new 0 ; 2 ; 7 ; 4 ; 6 ; 11 ; 5 ; 13
  fox 0 : 2 ; 4
  fox 2 : 0 ; -2
  fox 7 : 0 ; 10
  fox 4 : 0 ; 13
  fox 6 : 0 ; 11
  fox 11 : 0 ; 6
  fox 5 : 0 ; 12
  fox 13 : 0 ; 4

figure fig:red133
  target k
  phase under
  parent fig:red65
  class 8l+3
  let a=7l+2
  let b=a
  labels 0 ; 5l+1 ; 4l+1 ; 2l ; 2l+1 ; 5l+2 ; 7l+3 ; 7l+2 ; 6l+2
  pattern a ; b ; 2a-k ; 2b-k
  new 2l+1 ; 5l+2 ; 6l+2 ; 7l+3
  fox 2l+1 : 0 ; 6l+2
  fox 5l+2 : 2l+1 ; 7l+3
  fox 6l+2 : 0 ; 2l+1
  fox 7l+3 : 2l+1 ; 5l+2
  exclude l=2 -> fig:red133a

figure fig:red133a
  target k
  phase under
  parent fig:red133
  class 8l+3
  only l=2
  let a=7l+2
  let b=a
  labels 0 ; 12 ; 7 ; 5 ; -2
  pattern a ; b ; 2a-k ; 2b-k
  new 0 ; 12 ; 7 ; 5
  fox 0 : 12 ; 5
  fox 12 : 0 ; 7
  fox 7 : 0 ; 12
  fox 5 : 12 ; 0

figure fig:red134
  target k
  phase under
  parent fig:red65
  class 8l+5
  let a=l
  let b=a
  labels 0 ; 6l+3 ; l ; 4l+2 ; 3l+1 ; 2l+1 ; 6l+4 ; l+1 ; 3l+2
  pattern a ; b ; 2a-k ; 2b-k
  new l+1 ; 2l+1 ; 3l+2 ; 6l+4
  fox l+1 : 2l+1 ; 3l+1
  fox 2l+1 : 0 ; 6l+4
  fox 3l+2 : 2l+1 ; l
  fox 6l+4 : 0 ; 2l+1

figure fig:red138
  target k
  phase under
  parent fig:red65
  class 8l+7
  let a=3l+2
  let b=a
  labels 0 ; 4l+2 ; 4l+3 ; 2l+1 ; 6l+5 ; 2l+2 ; l+1 ; l ; 3l+2 ; 3l+3
  pattern a ; b ; 2a-k ; 2b-k
  new l+1 ; 2l+2 ; 3l+3 ; 6l+5
  fox l+1 : 6l+5 ; 3l+2
  fox 2l+2 : 0 ; 6l+5
  fox 3l+3 : 6l+5 ; l
  fox 6l+5 : 0 ; 2l+2

figure fig:red126a
  target k
  phase under
  parent fig:red65
  class 8l+1
  let a=7l
  let b=a
  labels 5l-1 ; 4l ; 2l-1 ; 6l ; 7l ; 1 ; 2l+2 ; 5l+2 ; 7l+3 ; 5l+1 ; 6l+1
  pattern a ; b ; 2a-k ; 2b-k
  new 2l+2 ; 5l+2 ; 6l+1 ; 7l+3
  fox 2l+2 : 1 ; 6l+1
  fox 5l+2 : 2l+2 ; 7l+3
  fox 6l+1 : 4l ; 2l-1
  fox 7l+3 : 2l+2 ; 5l+2

figure fig:red133alpha
  target k
  phase under
  parent fig:red65
  class 8l+3
  let a=5l+1
  let b=a
  labels 1 ; 5l+1 ; 4l+1 ; 2l ; 2l+1 ; 5l+4 ; 7l+3 ; 7l+4 ; 6l+4 ; 7l+1 ; 6l+1
  pattern a ; b ; 2a-k ; 2b-k
  new 2l+1 ; 6l+4
  fox 2l+1 : 1 ; 6l+4
  fox 6l+4 : 1 ; 2l+1
  exclude l=1 -> fig:red133betaalpha

figure fig:red133beta
  target k
  phase under
  parent fig:red133alpha
  class 8l+3
  let a=5l+1
  let b=a
  labels 1 ; 5l+1 ; 3l+1 ; l+1 ; 2l ; 2l+1 ; 2l+4 ; 7l+3 ; 3l+4 ; 6l+4 ; 7l+1 ; 6l+1
  pattern a ; b ; 2a-k ; 2b-k
  new l+1 ; 2l+1 ; 2l+4 ; 3l+4 ; 5l+1 ; 6l+4
  fox l+1 : 3l+1 ; 5l+1
  fox 2l+1 : 1 ; 6l+4
  fox 2l+4 : 1 ; 6l+1
  fox 3l+4 : 1 ; 5l+1
  fox 5l+1 : 1 ; 3l+4
  fox 6l+4 : 1 ; 2l+1
  exclude l=1 -> fig:red133betaalpha
  exclude l=1 -> fig:red133betabeta
  exclude l=1 -> fig:red133betabetabeta
  exclude l=1 -> fig:red133betabetabetabis

figure fig:red133betaalpha
  target k
  phase under
  parent fig:red133beta
  class 8l+3
  only l=1
  let a=5l+1
  let b=a
  labels 3 ; 5 ; 6 ; 7 ; 8
  pattern a ; b ; 2a-k ; 2b-k
  new 3 ; 8
  fox 3 : 5 ; 7
  fox 8 : 7 ; 6

figure fig:red133betabeta
  target k
  phase under
  parent fig:red133beta
  class 8l+3
  only l=1
  let a=5l+1
  let b=a
  labels 3 ; 0 ; 6 ; 7 ; 1 ; -1
  pattern a ; b ; 2a-k ; 2b-k
  new 3 ; 0 ; 1
  fox 3 : 7 ; 0
  fox 0 : 3 ; 6
  fox 1 : 3 ; k

figure fig:red133betabetabeta
  target k
  phase under
  parent fig:red133beta
  class 8l+3
  only l=1
  let a=5l+1
  let b=a
  labels 4 ; 2 ; 3 ; 0 ; 6 ; 7 ; 1 ; -1
  pattern a ; b ; 2a-k ; 2b-k
  new 4 ; 2 ; 3 ; 0 ; 1
  fox 4 : 2 ; 0
  fox 2 : 4 ; 6
  fox 3 : 4 ; k
  fox 0 : 2 ; 4
  fox 1 : 4 ; 7

figure fig:red133betabetabetabis
  target k
  phase under
  parent fig:red133beta
  class 8l+3
  only l=1
  let a=5l+1
  let b=a
  labels 4 ; 0 ; 2 ; 1 ; 3 ; 7 ; -1
  pattern a ; b ; 2a-k ; 2b-k
  new 4 ; 0 ; 2 ; 1 ; 3
  fox 4 : 0 ; 7
  fox 0 : 2 ; 4
  fox 2 : 4 ; a
  fox 1 : 4 ; 7
  fox 3 : 4 ; k

figure fig:red134alpha
  target k
  phase under
  parent fig:red65
  class 8l+5
  let a=3l+1
  let b=a
  labels 1 ; 2l+3 ; l ; 4l+2 ; 3l+1 ; 2l ; 6l+4 ; l-1 ; 3l+2 ; l+2 ; 3l+4
  pattern a ; b ; 2a-k ; 2b-k
  new l+2 ; 2l+3 ; 3l+4
  fox l+2 : 2l+3 ; 3l+4
  fox 2l+3 : 1 ; 6l+4
  fox 3l+4 : 2l+3 ; l+2

figure fig:red138alpha
  target k
  phase under
  parent fig:red65
  class 8l+7
  let a=l
  let b=a
  labels 1 ; 3l+4 ; 4l+3 ; 2l+1 ; 6l+4 ; 2l+2 ; 6l+7 ; l ; 3l+1 ; l+3
  pattern a ; b ; 2a-k ; 2b-k
  new l+3 ; 2l+2 ; 3l+4 ; 6l+7
  fox l+3 : 2l+2 ; 3l+1
  fox 2l+2 : 1 ; 6l+7
  fox 3l+4 : 2l+2 ; l
  fox 6l+7 : 1 ; 2l+2
)DSL";

inline constexpr const char* tables = R"DSL(
table Ta:fig:red3bis on fig:eps3
  2a-b=2k => R b=2a+1 -> fig:red3b=2a+1
  2a-2b-1=2k => R b=a -> fig:red3b=a

table Ta:fig:red3b=2a+1 on fig:red3b=2a+1
  3a+2=2k => X a=-1

table Ta:fig:red3b=a on fig:red3b=a
  3a+2=2k => X a=-1
  4a+3=2k => X a=-1

table Ta:fig:red5 on fig:red5
  2a+2=-1 => R a=k-1 -> fig:red5bis
  2a+2=-2 => X a=-2
  3a+4=-1 => R 3a=-5 -> fig:red5bis
  3a+4=-2 => X a=-2

table Ta:fig:red5bis2 on fig:red5bis when a=k-1
  k-3=-1 => X! p=5
  k-3=-2 => X! p=3

table Ta:fig:red5bis on fig:red5bis when 3a=-5
  a-1=-1 => X! p=5
  a-1=-2 => X a=-1

table Ta:fig:red6 on fig:red6
  2a-b=2k => R b=2a+1 -> fig:red6b2a+1
  2a-b=2k-1 => R b=2a+2 -> fig:red10
  2a-2b-2=2k => R b=a+k -> fig:red13
  2a-2b-2=2k-1 => R b=a -> fig:red14

table Ta:fig:red6b2a+1 on fig:red6b2a+1
  2a=2k => R a=k -> fig:red7
  2a=2k-1 => X a=-1
  3a+2=2k => X a=-1
  3a+2=2k-1 => R a=l-1 @3l+1 | a=2l @3l+2 -> fig:red8, fig:red9

table Ta:fig:red8 on fig:red8
  l+1=3l => X! l+1<=2l<3l
  l+1=3l-1 => X! l=1
  3l-3=3l => X! p=3
  3l-3=3l-1 => X! p=2

table Ta:fig:red9 on fig:red9
  2l+2=3l+1 => X! l=1
  2l+2=3l => X! l=2

table Ta:fig:red10 on fig:red10
  3a+4=2k => R a=2l-1 @3l+1 | a=l-1 @3l+2 -> fig:red11, fig:red12
  3a+4=2k-1 => X a=-2

table Ta:fig:red11 on fig:red11
  l+1=3l => X! l+1<=2l<3l
  l+1=3l-1 => X! l=1
  2l+1=3l => X! l=1
  2l+1=3l-1 => X! l=2

table Ta:fig:red12 on fig:red12
  l+1=3l+1 => X! l=0 | p=2
  l+1=3l => X! l+1<=2l<3l
  2l+2=3l+1 => X! l=1
  2l+2=3l => X! l=2

table Ta:fig:red14 on fig:red14
  4a+6=2k => R a=3l-1 @4l+1 | a=l-1 @4l+3 -> fig:red15, fig:red16
  4a+6=2k-1 => X a=-2
  3a+4=2k => R a=2l-1 @3l+1 | a=l-1 @3l+2 -> fig:red17, fig:red18
  3a+4=2k-1 => X a=-2

table Ta:fig:red15 on fig:red15
  l-3=-1 => X! l=2
  l-3=-2 => X! l=1
  l-1=-1 => X! l=0
  l-1=4l-1 => X! l=0 | p=3
  2l-3=-1 => X! l=1
  2l-3=4l-1 => X! 2l-3<3l-2<4l-1
  2l-2=4l => X! 2l-1<3l<4l
  2l-2=-2 => X! l=0 | p=2

table Ta:fig:red16 on fig:red16
  2l-2=-1 => X! 2l-2<3l<4l+2
  2l-2=-2 => X! l=0
  2l-1=-1 => X! l=0
  2l-1=-2 => X! 2l-1<3l<4l+1
  3l-1=-1 => X! l=0
  3l-1=-2 => X! 3l-1<4l+1
  3l+1=-1 => X! 3l+1<4l+2
  3l+1=-2 => X! l=0

table Ta:fig:red17 on fig:red17
  l=-1 => X! l=0 | p=2
  l=-2 => X! l<2l<3l-1
  2l+1=-1 => X! l=1
  2l+1=-2 => X! l=2

table Ta:fig:red18 on fig:red18
  l=-1 => X! l<3l+1
  l=-2 => X! l<3l
  l+1=-1 => X! l=0 | p=2
  l+1=-2 => X! l+1<=2l<3l
  2l+1=-1 => X! l=0
  2l+1=-2 => X! l=1

table Ta:fig:49h on fig:49h
  2a-k=-1 => R 2a=k-1 -> fig:49v
  2a-k=-2 => R 2a=k-2 -> fig:49v
  2a-k=k => X a=k

table Ta:fig:49v on fig:49v
  2a-k=-1 => V -2a-2-k=0
  2a-k=-2 => V -2a-2-k=1

table Ta:fig:50- on fig:50-
  2a-k=-1 => R a=3l @4l+1 | a=l @4l+3 -> fig:50a, fig:50b
  2a-k=-2 => R a=l-1 @4l+1 | a=3l+1 @4l+3 -> fig:50c, fig:50d
  2a-k=k => X a=k
  3a+1=-1 => R a=2l @3l+1 | a=l @3l+2 -> fig:50f, fig:50g
  3a+1=-2 => X a=-1
  3a+1=k => X a=k

table Ta:fig:red50a on fig:50a
  3l+1=4l => X! l=1
  3l+1=4l-1 => X! l=2

chain Ta:fig:red50b on fig:50b
  0 < l+1 < 2l+1 < 3l+1 < 4l+1 < 4l+2

table Ta:fig:red50c on fig:50c
  l+2=2l => X! p=9
  l+2=4l-1 => X! p=5
  l+2=4l => X! 3l=2

table Ta:fig:red50d on fig:50d
  3l+4=2l+1 => X! 2l+1<3l+4
  3l+4=4l+1 => X! p=15
  3l+4=4l+2 => R l=2 & p=11 -> fig:50e

chain Ta:fig:red50f on fig:50f
  l < 3l < 6l-1 < 6l

table Ta:fig:red50g on fig:50g
  5l+4=3l+2 => X! 3l+2<5l+4
  5l+4=6l+3 => R p=11
  5l+4=6l+4 => X! 5l+4<6l+4

table Ta:fig:red54 on fig:54
  2a-b=-1 => R b=2a+1 -> fig:55
  2a-b=-2 => R b=2a+2 -> fig:552a+2
  2a-b=k => R b=2a-k -> fig:752a-k
  2a-2b+k=-1 => R b=a+3l+1 @4l+1 | b=a+l+1 @4l+3 -> fig:redk2(b-a)=k+1k=2l, fig:redk2(b-a)=k+1k=2l+1
  2a-2b+k=-2 => R b=a+l+1 @4l+1 | b=a+3l+3 @4l+3 -> fig:redk2(b-a)=k+2k=2l, fig:redk2(b-a)=k+2k=2l+
  2a-2b+k=k => R b=a -> fig:red65

table Ta:fig:red55 on fig:55
  2a+2+k=-1 => X 2a-k=-2
  2a+2+k=-2 => R a=3l-1 @4l+1 | a=l-1 @4l+3 -> fig:72aa, fig:73a
  2a+2+k=k => X a=-1
  3a+2=-1 => X a=-1
  3a+2=-2 => R a=l-1 @3l+1 | a=2l @3l+2 -> fig:70aa, fig:71aa
  3a+2=k => R a=5l @6l+1 | a=l @6l+5 -> fig:70, fig:71

table Ta:fig:red72aa on fig:72aa
  l-4=2l => X! l-4<2l
  l-4=-1 => R l=3 -> fig:72aaa
  l-4=-2 => X! p=9
  2l-5=2l => X! 2l-5<2l
  2l-5=-1 => X! p=9
  2l-5=-2 => X! 2l=3
  2l-3=2l => X! 2l-3<2l
  2l-3=-1 => X! p=5
  2l-3=-2 => X! 2l=1
  2l-1=2l => X! 2l-1<2l
  2l-1=-1 => X! l=0
  2l-1=-2 => X! 2l=-1

chain Ta:fig:red73a on fig:73a
  2l-4 < 2l-2 < 2l < 2l+1 <= 3l-2 < 4l+1 < 4l+2

chain Ta:fig:red70 on fig:70
  3l-1 < 3l <= 4l-1 < 5l-1 < 6l-1 < 6l

chain Ta:fig:red71 on fig:71
  l-1 < 2l < 3l+1 < 3l+2 < 6l+3 < 6l+4

chain Ta:fig:70aa on fig:70aa
  l-5 < 2l-4 < 3l-3 < 3l

chain Ta:fig:red71aa on fig:71aa
  l-3 < 2l-1 < 3l+1 < 3l+2 < 6l+3 < 6l+4

table Ta:fig:red552a+2 on fig:552a+2
  2a+4+k=-1 => R a=l-2 @4l+1 | a=3l @4l+3 -> fig:72aa2a+2, fig:73a2a+2
  2a+4+k=-2 => R a=3l-2 @4l+1 | a=l-2 @4l+3 -> fig:72aa2a+2k-5, fig:73a2a+2k-5
  2a+4+k=k => X a=-2
  3a+4=-1 => R a=4l-1 @6l+1 | a=2l @6l+5 -> fig:703a-5, fig:red713a-5
  3a+4=-2 => X a=-2
  3a+4=k => X 2a+2=-1

chain Ta:fig:red72aa2a+2 on fig:72aa2a+2 lmin 3
  2l-7 < 2l-5 < 2l-3 < 2l <= 3l-5 < 4l-1 < 4l

chain Ta:fig:red73a2a+2 on fig:73a2a+2 lmin 2
  l-5 <= 2l-6 < 2l-4 < 2l-2 < 2l+1 < 4l+1 < 4l+2

chain Ta:fig:red72aa2a+2k-5 on fig:72aa2a+2k-5 lmin 2
  l-7 <= 2l-9 < 2l < 4l-1 < 4l

chain Ta:fig:red73a2a+2k-5 on fig:73a2a+2k-5
  2l-8 < 2l+1 <= 3l-5 < 4l+1 < 4l+2

chain Ta:fig:red703a-5 on fig:703a-5 lmin 2
  l-5 < 2l-4 < 3l-3 < 3l <= 6l-3 < 6l-1 < 6l

chain Ta:fig:red713a-5 on fig:red713a-5 lmin 1
  l-3 < 2l-1 < 3l+1 < 3l+2 < 6l+3 < 6l+4

table Ta:fig:red752a-k on fig:752a-k
  3a+1=-1 => R a=4l @6l+1 | a=2l+1 @6l+5 -> fig:752a-kk=3l, fig:752a-kk=3l+2
  3a+1=-2 => X a=-1
  3a+1=k => X a=k

chain Ta:fig:red752a-kk=3l on fig:752a-kk=3l lmin 2
  3l-1 < 3l < 4l-1 < 5l-1 < 6l-1 < 6l

chain Ta:fig:red752a-kk=3l+2 on fig:752a-kk=3l+2 lmin 1
  l-1 < 2l < 3l+1 < 3l+2 < 6l+3 < 6l+4

table Ta:fig:redk2(b-a)=k+1k=2l on fig:redk2(b-a)=k+1k=2l
  a+2l+1=2l => X a=-1
  a+2l+1=-1 => X 2a+1=-2
  a+2l+1=-2 => R a=2l-2 -> fig:redk2(b-a)=k+1k=2la=2l-2

chain Ta:fig:redk2(b-a)=k+1k=2la=2l-2 on fig:redk2(b-a)=k+1k=2la=2l-2 lmin 3
  2l-8 < 2l-6 < 2l <= 3l-6 < 4l-4

table Ta:fig:redk2(b-a)=k+1k=2l+1 on fig:redk2(b-a)=k+1k=2l+1
  a+2l+2=2l+1 => X a=-1
  a+2l+2=-1 => X 2a+1=-2
  a+2l+2=-2 => R a=2l-1 -> fig:redk2(b-a)=k+1k=2l+1a=2l-1

chain Ta:fig:redk2(b-a)=k+1k=2l+1a=2l-1 on fig:redk2(b-a)=k+1k=2l+1a=2l-1 lmin 2
  l-5 <= 2l-6 < 2l-4 < 2l-2 < 2l+1 < 4l+1 < 4l+3

table Ta:fig:redk2(b-a)=k+2k=2l on fig:redk2(b-a)=k+2k=2l
  a+2l+2=2l => X a=-2
  a+2l+2=-1 => R a=2l-2 -> fig:redk2(b-a)=k+2k=2la=2l-2tritri
  a+2l+2=-2 => R a=2l-3 -> fig:redk2(b-a)=k+2k=2la=2l-2

chain Ta:fig:redk2(b-a)=k+2k=2la=2l-2 on fig:redk2(b-a)=k+2k=2la=2l-2tritri lmin 3
  l-7 <= 2l-8 < 2l-6 < 2l < 4l-5 < 4l-1 < 4l

chain Ta:fig:redk2(b-a)=k+2k=2la=2l-2bis on fig:redk2(b-a)=k+2k=2la=2l-2 lmin 3
  l-7 <= 2l-9 < 2l < 4l-1 < 4l

table Ta:fig:redk2(b-a)=k+2k=2l+ on fig:redk2(b-a)=k+2k=2l+
  a+2l+3=2l+1 => X a=-2
  a+2l+3=-1 => R a=2l-1 -> fig:redk2(b-a)=k+2k=2l+1a=2l-1
  a+2l+3=-2 => R a=2l-2 -> fig:redk2(b-a)=k+2k=2l+1a=2l-2

chain Ta:fig:redk2(b-a)=k+2k=2l+1a=2l-1 on fig:redk2(b-a)=k+2k=2l+1a=2l-1 lmin 2
  2l-7 < 2l-5 < 2l+1 <= 3l-5 < 4l-3 < 4l+1 < 4l+2

chain Ta:fig:redk2(b-a)=k+2k=2l+1a=2l-2 on fig:redk2(b-a)=k+2k=2l+1a=2l-2 lmin 2
  2l-8 < 2l+1 <= 3l-5 < 4l+1 < 4l+2

table Ta:fig:red65 on fig:red65
  3a+1=k => X a=k
  3a+1=-1 => R a=4l @6l+1 | a=2l+1 @6l+5 -> fig:red116bis, fig:red111
  3a+1=-2 => X a=-1
  4a+k+2=k => X a=k
  4a+k+2=-1 => R a=5l @8l+1 | a=7l+2 @8l+3 | a=l @8l+5 | a=3l+2 @8l+7 -> fig:red126, fig:red133, fig:red134, fig:red138
  4a+k+2=-2 => R a=7l @8l+1 | a=5l+1 @8l+3 | a=3l+1 @8l+5 | a=l @8l+7 -> fig:red126a, fig:red133alpha, fig:red134alpha, fig:red138alpha

chain Ta:fig:red116 on fig:red116bis lmin 2
  2l+1 <= 3l < 3l+1 < 4l+1 < 5l+1 <= 6l-1 < 6l

chain Ta:fig:red111 on fig:red111 lmin 1
  2l < 3l+1 < 3l+2 < 4l+2 < 5l+3 < 6l+3 < 6l+4

chain Ta:fig:red126 on fig:red126 lmin 2
  2l < 4l < 5l+1 < 6l+1 < 7l+1 <= 8l-1 < 8l

chain Ta:fig:red133 on fig:red133 lmin 1
  2l+1 < 4l+1 < 5l+2 < 6l+2 < 7l+3 <= 8l+1 < 8l+2

chain Ta:fig:red134 on fig:red134 lmin 1
  l+1 < 2l+1 < 3l+2 < 4l+2 < 6l+4 < 8l+3 < 8l+4

chain Ta:fig:red138 on fig:red138 lmin 2
  l+1 < 2l+2 < 3l+3 < 4l+3 < 6l+5 < 8l+5 < 8l+6

chain Ta:fig:red126bis on fig:red126a lmin 2
  2l+2 <= 4l < 5l+2 <= 6l+1 < 7l+3 <= 8l-1 < 8l

chain Ta:fig:red133bis on fig:red133beta lmin 1
  l+1 < 2l+1 < 2l+4 < 3l+4 <= 4l+1 < 5l+1 < 6l+4 <= 8l+1 < 8l+2

chain Ta:fig:red134alpha on fig:red134alpha lmin 1
  l+2 < 2l+3 < 3l+4 <= 4l+2 < 8l+3 < 8l+4

chain Ta:fig:red138alpha on fig:red138alpha lmin 2
  l+3 <= 2l+2 < 3l+4 <= 4l+3 < 6l+7 <= 8l+5 < 8l+6
)DSL";

}  // namespace foxcolor::catalog_text
