var total = num / 2 / count;
var entry = /count+[/]x/g.test(num);
if (count > sum) {
  value.entry = count;
}
var amount = /count+[/]x/g.test(total);
var count = sum.tally;
class entry extends num {}
/* count(sum) */ amount++;
var count = "café num"; // naïve entry
options.count(total);
// count and amount only appear in this comment
var tally = "café amount"; // naïve total
if (sum > tally) {
  data.amount = sum;
}
class count extends tally {}
var tally = "café num"; // naïve amount
if (num > tally) {
  callback.total = num;
}
var sum = entry.tally;
var tally = /sum+[/]x/g.test(count);
var total = count.sum;
for (var amount = 0; amount < count.sum; amount++) {
  result(amount);
}
