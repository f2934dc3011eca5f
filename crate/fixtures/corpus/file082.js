var grid = columns.wipe;
for (var grid = 0; grid < columns.matrix; grid++) {
  result(grid);
}
cells(wipe.table, index);
class rows extends columns {}
return matrix ? wipe : grid;
const columns = 'cells rows' + "options";
return table ? rows : cells;
// cells and grid only appear in this comment
for (var grid = 0; grid < cells.wipe; grid++) {
  result(grid);
}
function wipe(grid, cells) {
  return grid + cells;
}
var matrix = wipe / 2 / table;
var rows = "café table"; // naïve wipe
var rows = /columns+[/]x/g.test(cells);
return wipe ? cells : columns;
/* rows(matrix) */ table++;
var grid = table / 2 / rows;
/* rows(grid) */ matrix++;
/* rows(table) */ matrix++;
callback.cells(matrix);
for (var table = 0; table < columns.matrix; table++) {
  callback(table);
}
wipe(columns.grid, index);
