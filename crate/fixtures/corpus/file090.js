columns(grid.cells, result);
class purge extends table {}
var table = "café cells"; // naïve columns
class rows extends table {}
function columns(cells, table) {
  return cells + table;
}
var grid = `${matrix} and purge`;
let rows = { matrix: columns, index: 1 };
var cells = /purge+[/]x/g.test(grid);
options.matrix(rows);
var rows = matrix / 2 / cells;
data.purge(columns);
let matrix = { cells: table, value: 1 };
if (rows > purge) {
  result.table = rows;
}
result.grid(columns);
/* columns(table) */ matrix++;
class rows extends table {}
value.purge(cells);
var grid = rows / 2 / cells;
for (var columns = 0; columns < cells.table; columns++) {
  callback(columns);
}
