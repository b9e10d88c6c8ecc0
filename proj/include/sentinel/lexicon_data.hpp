#pragma once
// GENERATED by tools/embed_lexicons.py from data/*.txt -- do not edit.
// The data files remain authoritative; a test checks for drift.

namespace sentinel::lexicon_data {

// data/stopwords_en.txt
inline constexpr const char* kStopwordsText = R"lex(a
about
above
after
again
against
ain
all
am
an
and
any
are
aren
as
at
b
be
because
been
before
being
below
between
both
but
by
c
can
couldn
d
did
didn
do
does
doesn
doing
don
down
during
e
each
f
few
for
from
further
g
h
had
hadn
has
hasn
have
haven
having
he
her
here
hers
herself
him
himself
his
how
i
if
in
into
is
isn
it
its
itself
j
just
k
l
ll
m
ma
me
mightn
more
most
mustn
my
myself
n
needn
now
o
of
off
on
once
only
or
other
our
ours
ourselves
out
over
own
p
q
r
re
s
same
shan
she
should
shouldn
so
some
such
t
than
that
the
their
theirs
them
themselves
then
there
these
they
this
those
through
to
too
u
under
until
up
v
ve
very
w
was
wasn
we
were
weren
what
when
where
which
while
who
whom
why
with
won
wouldn
x
y
you
your
yours
yourself
yourselves
z
)lex";

// data/lemma_exceptions_en.txt
inline constexpr const char* kLemmaExceptionsText = R"lex(ate eat
beaten beat
became become
becoming become
began begin
beginning begin
begun begin
bent bend
bit bite
bitten bite
bled bleed
blew blow
blown blow
bought buy
broke break
broken break
brought bring
built build
burnt burn
came come
caught catch
children child
chose choose
chosen choose
dealt deal
done do
drank drink
drawn draw
drew draw
driven drive
drove drive
drunk drink
dug dig
dunno know
dying die
eaten eat
evening evening
fallen fall
fed feed
feet foot
fell fall
felt feel
fled flee
flew fly
flown fly
forgave forgive
forgiven forgive
forgot forget
forgotten forget
fought fight
found find
froze freeze
frozen freeze
gave give
geese goose
given give
goes go
gone go
gonna go
got get
gotta get
gotten get
grew grow
grown grow
heard hear
held hold
hid hide
hidden hide
hung hang
kept keep
knew know
known know
laid lay
lain lie
lay lie
leapt leap
learnt learn
leaves leave
led lead
left leave
lent lend
lit light
lost lose
lying lie
made make
meant mean
men man
met meet
mice mouse
morning morning
nevermind mind
news news
paid pay
ran run
rang ring
ridden ride
risen rise
rode ride
rose rise
rung ring
said say
sang sing
sank sink
sat sit
saw see
seen see
sent send
set set
shaken shake
shone shine
shook shake
shot shoot
shown show
shut shut
slept sleep
slid slide
sold sell
spent spend
spoke speak
spoken speak
spun spin
stole steal
stolen steal
stood stand
struck strike
stuck stick
stung sting
sung sing
sunk sink
swam swim
swept sweep
swore swear
sworn swear
swum swim
swung swing
taken take
taught teach
teeth tooth
threw throw
thrown throw
told tell
took take
tore tear
torn tear
tying tie
understood understand
wanna want
went go
wept weep
withdrew withdraw
woke wake
woken wake
women woman
wore wear
worn wear
written write
wrote write
)lex";

// data/wordlist_en.txt
inline constexpr const char* kWordlistText = R"lex(abandon
abandonment
ability
able
abuse
accept
accident
account
ache
achieve
act
action
actual
add
address
adult
advice
afford
afraid
age
agree
ahead
air
alarm
alcohol
alive
alone
amaze
anger
angry
animal
ankle
annoy
answer
anxiety
anxious
anymore
apart
apartment
apologize
apology
app
appear
apply
appointment
appreciate
area
argue
argument
arm
army
arrive
art
article
ask
asleep
ass
assume
attack
attempt
attend
attention
attitude
august
aunt
avoid
awake
award
aware
awful
awkward
baby
back
bad
bag
balance
ball
band
bank
bar
base
basic
bath
bathroom
battle
beach
bear
beat
beautiful
beauty
become
bed
bedroom
beer
begin
behavior
believe
belong
benefit
best
bet
better
big
bike
bill
bird
birthday
bitch
bite
black
blade
blame
bleed
bless
blind
block
blog
blood
blow
blue
board
boat
body
bone
book
bore
boring
born
boss
bother
bottle
bottom
box
boy
boyfriend
brain
brave
bread
break
breakdown
breakfast
breath
breathe
bridge
bright
bring
brother
brown
buddy
build
bully
burden
burn
bus
business
busy
butt
buy
call
calm
camera
camp
cancer
capable
car
card
care
career
careful
carry
case
cat
catch
cause
celebrate
chain
chance
change
chapter
chat
cheap
cheat
check
cheer
chest
child
childhood
chocolate
choice
choose
church
circle
city
class
classmate
clean
clear
client
cliff
climb
clinic
clock
close
clothes
cloud
club
coach
coffee
cold
collapse
college
color
comfort
comment
commit
common
community
company
complain
complete
computer
concern
condition
confidence
confident
confuse
congratulation
connect
connection
consider
constant
contact
continue
control
conversation
convince
cook
cool
cope
copy
corner
cost
counselor
count
country
couple
courage
course
court
cousin
cover
crash
crazy
create
creative
credit
crisis
cross
crowd
cruel
cry
culture
cup
cure
current
cut
cute
dad
daily
damage
dance
danger
dangerous
dark
darkness
data
date
daughter
day
dead
deal
dear
death
debt
decade
decide
decision
deep
defeat
defend
define
degree
delete
deliver
demand
deny
depend
depress
depression
describe
deserve
desire
desk
desperate
despite
destroy
detail
device
diagnose
diagnosis
diary
die
diet
different
difficult
dinner
direction
dirty
disappear
disappoint
disaster
discord
discover
discuss
disease
disgust
dish
disorder
distance
distract
doctor
dog
dollar
door
dose
doubt
drag
drama
draw
dream
dress
drink
drive
drop
drug
dry
due
dumb
early
earn
earth
easy
eat
edge
effect
effort
email
embarrass
emergency
emotion
emotional
empty
end
endless
enemy
energy
enjoy
enough
enter
entire
episode
escape
essay
eve
event
everyone
everything
evil
exam
example
excite
excuse
exercise
exhaust
exist
expect
expensive
experience
explain
expression
extra
eye
face
fact
fade
fail
failure
fair
faith
fake
fall
familiar
family
famous
fan
fantasy
far
fast
fat
father
fault
favor
favorite
fear
feed
feel
feeling
fight
figure
file
fill
film
final
finally
find
fine
finger
finish
fire
first
fish
fit
fix
flag
flashback
flat
flip
float
floor
flow
flower
fly
focus
follow
food
fool
foot
football
force
forever
forget
forgive
form
fortune
forward
frame
free
freedom
freeze
fresh
friend
friendship
fright
front
fruit
fuck
fucking
full
fun
funeral
funny
future
gain
game
garden
gather
gay
gender
general
gentle
genuine
gift
girl
girlfriend
give
glad
glasgow
glass
go
goal
god
gold
good
goodbye
goose
grab
grade
graduate
grand
grandma
grandmother
grandpa
grateful
grave
gray
great
green
grief
grieve
ground
group
grow
growth
guarantee
guard
guess
guilt
guilty
gun
gut
guy
habit
hair
half
hand
handle
hang
happen
happiness
happy
hard
harm
hate
hatred
head
headache
heal
health
healthy
hear
heart
heartbreak
heat
heaven
heavy
hell
hello
helmet
help
helpless
hide
high
highway
hill
history
hit
hobby
hold
hole
holiday
home
homework
honest
honestly
hope
hopeless
horny
horrible
horror
hospital
hot
hotline
hour
house
hug
huge
human
humor
hunger
hungry
hurt
husband
ice
idea
identity
idiot
ignore
ill
illness
image
imagine
impact
important
impossible
improve
inch
incident
include
india
information
injure
injury
innocent
insane
inside
insomnia
instance
instead
insult
insurance
intense
intention
interest
internet
invent
invite
involve
iron
island
isolate
issue
jail
job
join
joke
journal
journey
joy
judge
jumanji
jump
junior
keep
key
kick
kid
kill
killer
kind
kiss
kitchen
knife
knock
know
knowledge
lab
lack
lady
land
laptop
large
last
late
laugh
law
lawyer
lazy
lead
leaf
learn
leave
lecture
leg
lesson
letter
level
lie
life
lift
light
limit
line
link
list
listen
little
live
load
loan
local
lock
loneliness
lonely
long
look
lose
loser
loss
lot
loud
love
lovely
low
luck
lucky
lunch
machine
mad
mail
main
major
make
man
manage
manager
manner
map
mark
marriage
marry
mask
mass
match
mate
math
matter
mean
meaning
meaningless
medical
medicate
medication
medicine
meet
meeting
member
memory
mental
mentally
mention
mess
message
method
middle
midnight
mile
military
milk
mind
mine
minute
mirror
miserable
misery
miss
mistake
mix
mom
moment
monday
money
monster
month
mood
moon
mother
motivation
mountain
mouse
mouth
move
movie
much
mum
murder
muscle
music
name
narrative
nature
near
nearby
neck
need
needle
negative
neighbor
nerve
nervous
never
new
nice
night
nightmare
nintendo
nobody
noise
normal
nose
note
nothing
notice
notification
november
numb
number
nurse
obsess
obvious
occur
ocean
offer
office
officer
official
okay
old
one
online
open
opinion
opportunity
option
orange
order
ordinary
organize
others
outside
overcome
overdose
overpass
overwhelm
owe
pack
page
pain
painful
paint
pair
panic
paper
parent
park
part
partner
party
pass
passion
past
path
patience
patient
pattern
pause
pay
peace
peaceful
pen
people
perfect
period
person
personal
personality
pet
phase
phone
photo
physical
pick
picture
piece
pill
pity
pizza
place
plan
planet
plate
play
player
please
pleasure
pocket
poem
point
poison
police
poor
popular
porn
positive
possible
post
pot
pound
power
powerless
practice
praise
pray
prayer
prepare
prescribe
presence
present
pressure
pretend
pretty
prevent
previous
price
pride
print
prison
private
prize
problem
process
product
professional
profile
program
progress
project
promise
proof
protect
proud
prove
provide
psychiatrist
psychologist
public
pull
punch
punish
purpose
push
pussy
put
question
quick
quiet
quit
quote
race
rage
rain
raise
random
rant
rate
rather
razor
reach
react
reaction
read
ready
real
reality
realize
reason
receive
recent
recognize
record
recover
recovery
red
reddit
refer
reflect
refuse
regret
reject
relapse
relate
relationship
relative
relax
release
relief
relieve
religious
religiously
remain
remember
remind
remove
rent
repeat
replace
reply
report
require
rescue
research
resent
resist
respect
respond
response
responsibility
rest
result
return
reveal
revenge
rich
rid
ride
right
ring
rise
risk
river
road
rock
role
roll
romantic
roof
room
roommate
rope
rough
routine
rude
ruin
rule
run
sad
sadness
safe
safety
sake
salary
sale
sanity
save
say
scar
scare
scared
scary
scene
schedule
scholarship
school
score
scream
screen
scroll
search
season
seat
second
secret
section
security
see
seek
self
selfish
sell
semester
send
senior
sense
sensitive
sentence
separate
series
serious
seriously
serve
service
session
severe
shake
shame
shape
share
sharp
shine
ship
shirt
shit
shitty
shock
shoot
shop
short
shoulder
shout
show
shower
shut
shy
sibling
sick
side
sigh
sign
signal
silence
silent
silly
simple
sin
sing
single
sink
sister
sit
site
situation
size
skill
skin
skip
sky
slap
sleep
sleepy
slide
slip
slow
small
smart
smell
smile
smoke
snap
sober
soccer
social
society
soft
solution
solve
someone
something
sometimes
son
song
sorrow
sorry
sort
soul
sound
source
space
spark
speak
special
spend
spin
spiral
spirit
spite
sport
spot
sprain
spring
squat
stab
stable
stage
stair
stand
standard
star
stare
start
starve
state
station
stay
steal
step
stick
stigma
stomach
stop
store
storm
story
straight
strange
stranger
street
strength
stress
stretch
strike
strong
struggle
student
study
stuff
stupid
subject
succeed
success
suck
sudden
suffer
suffering
suggest
suicidal
suicide
summer
sun
support
suppose
sure
surgery
surprise
surround
survive
survivor
suspect
swallow
swear
sweat
sweet
swim
swing
switch
sympathy
symptom
system
table
take
talent
talk
tap
target
task
taste
tattoo
teach
teacher
team
tear
teenager
tell
temper
term
terrible
terrify
test
texture
thank
thankful
therapist
therapy
thing
think
thought
threat
threaten
throat
throw
tie
time
tire
tired
today
toe
tomorrow
tone
tongue
tonight
tool
tooth
top
topic
total
touch
tough
town
toxic
toy
track
trade
tragedy
train
training
trap
trauma
travel
treat
treatment
tree
trick
trigger
trip
trouble
truck
true
trust
truth
turn
tweet
twin
type
ugly
ultra
uncle
understand
university
unload
upset
use
useless
user
usual
vacation
value
vent
video
view
violence
violent
virus
visit
voice
void
vote
wait
wake
walk
wall
wander
want
war
warm
warn
waste
watch
water
wave
way
weak
weakness
weapon
wear
weather
web
website
week
weekend
weight
weird
welcome
well
wheel
white
whole
wife
win
window
wine
winter
wire
wise
wish
woman
wonder
wonderful
word
work
worker
world
worry
worse
worst
worth
worthless
wound
wrist
write
wrong
yard
year
yell
yellow
yesterday
young
zone
)lex";

}  // namespace sentinel::lexicon_data
